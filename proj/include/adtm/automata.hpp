#ifndef ADTM_AUTOMATA_HPP
#define ADTM_AUTOMATA_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "adtm/rng.hpp"

namespace adtm {

// Two actions of every automaton in this project. States 1..N map to
// Exclude, states N+1..2N map to Include; 1 and 2N are the deepest
// (most confident) states of their side.
enum class Action : std::uint8_t { Exclude = 0, Include = 1 };

enum class Response : std::uint8_t { Reward = 0, Penalty = 1 };

// Weak feedback moves one state, strong feedback moves s states.
enum class FeedbackStrength : std::uint8_t { Weak = 0, Strong = 1 };

// Determinism period d. Every d'th transition attempt of an automaton is
// stochastic (executed with probability 0.5, one coin consumed). Infinite d
// is an explicit sentinel: no coin is ever drawn.
class Determinism {
public:
    static Determinism finite(std::uint64_t d) {
        if (d < 1) throw std::invalid_argument("determinism period d must be >= 1");
        return Determinism(d);
    }
    static Determinism infinite() { return Determinism(0); }

    static Determinism parse(const std::string& token);

    bool is_infinite() const { return period_ == 0; }
    std::uint64_t period() const {
        if (is_infinite()) throw std::logic_error("period() called on infinite determinism");
        return period_;
    }

    std::string to_string() const;

    bool operator==(const Determinism& other) const = default;

private:
    explicit Determinism(std::uint64_t p) : period_(p) {}
    std::uint64_t period_; // 0 encodes infinity
};

inline Action action_of(int state, int n_states) {
    return state <= n_states ? Action::Exclude : Action::Include;
}

// Classic Tsetlin automaton step. Reward deepens the current action,
// penalty moves toward the middle and crosses over at the boundary.
// Total on [1, 2N].
int ta_transition(int state, int n_states, Response response);

// Krinsky: penalty as TA; reward jumps straight to the deepest state of the
// current action.
int krinsky_transition(int state, int n_states, Response response);

// Krylov: reward as TA; penalty applies the TA step only when the supplied
// fair coin shows 1.
int krylov_transition(int state, int n_states, Response response, bool coin_heads);

// Shared parameters of an MVF automaton team.
struct MvfParams {
    int n_states = 100;  // N, states per action
    int strong_step = 1; // s
    Determinism d = Determinism::finite(1);

    void validate() const {
        if (n_states < 1) throw std::invalid_argument("N must be >= 1");
        if (strong_step < 1) throw std::invalid_argument("s must be >= 1");
    }
};

// Multi-step variable-structure automaton: current state plus the transition
// attempt counter that drives the d-periodic stochastic turns.
struct MvfAutomaton {
    std::int32_t state = 1;
    std::uint64_t attempts = 0;
};

// Applies one reinforcement toward `target`. The attempt counter always
// advances; when it hits a multiple of d the move itself is decided by one
// fair coin (skipped on tails). Returns the number of coins consumed (0 or 1).
// Moves of strong feedback span s states; all moves saturate at [1, 2N].
int mvf_reinforce(MvfAutomaton& a, Action target, FeedbackStrength strength,
                  const MvfParams& params, Rng& coin_source);

enum class AutomatonKind : std::uint8_t { Ta = 0, Krinsky = 1, Krylov = 2 };

AutomatonKind parse_automaton_kind(const std::string& token);

struct ConvergenceReport {
    double optimal_fraction = 0.0; // trials ending on the better arm
    std::uint64_t coins_used = 0;  // krylov penalty coins across all trials
    int trials = 0;
    long steps = 0;
};

// Two-armed bandit environment: arm i rewards with probability reward_probs[i].
// Each trial runs an independent automaton from a boundary state and reports
// whether it ends on the arm with the higher reward probability.
ConvergenceReport simulate_two_armed(AutomatonKind kind, double reward_prob_a,
                                     double reward_prob_b, long steps, int trials,
                                     int n_states, std::uint64_t seed);

} // namespace adtm

#endif
