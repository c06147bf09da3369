#ifndef ADTM_TM_HPP
#define ADTM_TM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "adtm/automata.hpp"
#include "adtm/binarizer.hpp"
#include "adtm/rng.hpp"

namespace adtm {

// Classic regime drives the clause teams with single-step stochastic TA
// updates; Adtm uses the multi-step automata with d-periodic stochasticity.
enum class Regime : std::uint8_t { ClassicTm = 0, Adtm = 1 };

std::string to_string(Regime regime);
Regime regime_from_string(const std::string& s);

struct TmConfig {
    int feature_bits = 0;  // o; literals are the o features plus their negations
    int clause_count = 0;  // m, even; first half positive polarity
    int vote_target = 1;   // T
    int strong_step = 1;   // s
    int n_states = 100;    // N per action
    Determinism d = Determinism::finite(1);
    Regime regime = Regime::Adtm;
    // Class whose sub-patterns the positive-polarity clauses learn (they get
    // Type I feedback on samples of this class and the machine outputs it
    // when the vote is non-negative). 1 is the conventional orientation; 0
    // mirrors the machine.
    int positive_polarity_class = 1;

    void validate() const;
};

enum class ClauseMode : std::uint8_t { Learning = 0, Inference = 1 };

// Draw counters for one training run. "Coins" are random draws consumed by
// automaton updates; clause selection draws are the per-clause Bernoulli
// trials against the Type I/II selection probabilities.
struct RngAccounting {
    std::uint64_t ta_update_coins = 0;
    std::uint64_t clause_selection_draws = 0;
    std::uint64_t transition_attempts = 0;

    RngAccounting& operator+=(const RngAccounting& other) {
        ta_update_coins += other.ta_update_coins;
        clause_selection_draws += other.clause_selection_draws;
        transition_attempts += other.transition_attempts;
        return *this;
    }
};

struct Metrics {
    double f1 = 0.0;
    double accuracy = 0.0;
    std::uint64_t tp = 0, fp = 0, tn = 0, fn = 0;
};

Metrics metrics_from_confusion(std::uint64_t tp, std::uint64_t fp, std::uint64_t tn,
                               std::uint64_t fn);

struct EpochMetrics {
    int epoch = 0;
    double train_accuracy = 0.0;
    double test_accuracy = -1.0; // -1 when no test set was supplied
};

struct TrainOptions {
    bool shuffle = true;
    // Test hook: bypass the Eq.-style clause selection and give every clause
    // its feedback each sample. Draws are still counted as consumed.
    bool force_clause_selection = false;
};

struct FitResult {
    std::vector<EpochMetrics> curve;
    RngAccounting accounting;
};

// Vote-clamped selection probabilities for feedback, T >= 1.
double type_i_probability(int vote, int vote_target);
double type_ii_probability(int vote, int vote_target);

// Unit-step classification of a vote sum; the tie v = 0 maps to 1.
inline int classify_vote(int vote) { return vote >= 0 ? 1 : 0; }

// One reinforcement order for an automaton within a clause team.
struct FeedbackEvent {
    int literal = 0;
    Action target = Action::Exclude;
    FeedbackStrength strength = FeedbackStrength::Weak;
};

// The per-literal feedback tables. Type I: include-strong where the clause
// fired and the literal is 1, exclude-weak everywhere else. Type II: on a
// firing clause, include-strong for every 0-valued literal.
std::vector<FeedbackEvent> type_i_events(std::uint8_t clause_output,
                                         const std::vector<std::uint8_t>& literals);
std::vector<FeedbackEvent> type_ii_events(std::uint8_t clause_output,
                                          const std::vector<std::uint8_t>& literals);

class TsetlinMachine {
public:
    explicit TsetlinMachine(TmConfig config);

    const TmConfig& config() const { return config_; }
    int literal_count() const { return 2 * config_.feature_bits; }
    int clause_count() const { return config_.clause_count; }
    bool is_positive_clause(int clause) const { return clause < config_.clause_count / 2; }

    // l_k = x_k for k < o, l_{o+k} = !x_k.
    std::vector<std::uint8_t> make_literals(const std::vector<std::uint8_t>& x) const;

    bool includes(int clause, int literal) const {
        return team_[flat_index(clause, literal)].state > config_.n_states;
    }

    // AND over included literals; an empty clause reads 1 while learning and
    // 0 at inference time.
    std::uint8_t clause_output(int clause, const std::vector<std::uint8_t>& literals,
                               ClauseMode mode) const;

    // Positive-clause votes minus negative-clause votes.
    int class_sum(const std::vector<std::uint8_t>& literals, ClauseMode mode) const;

    int predict(const std::vector<std::uint8_t>& x) const;

    // One feedback pass for a labeled sample. Randomness is drawn from
    // substreams keyed by (run_seed, sample_serial, clause), so the result is
    // independent of clause update order and reproducible across runs.
    void train_sample(const std::vector<std::uint8_t>& x, int y, std::uint64_t run_seed,
                      std::uint64_t sample_serial, RngAccounting& accounting,
                      const TrainOptions& options = {});

    // Runs `epochs` passes over the training set (shuffled per epoch unless
    // disabled) and records the accuracy curve after each epoch.
    FitResult fit(const Dataset& train, const Dataset* test, int epochs, std::uint64_t seed,
                  const TrainOptions& options = {});

    // F1 (positive class = label 1) and accuracy over a test set.
    Metrics evaluate(const Dataset& test) const;

    std::int32_t state(int clause, int literal) const {
        return team_[flat_index(clause, literal)].state;
    }
    std::uint64_t attempts(int clause, int literal) const {
        return team_[flat_index(clause, literal)].attempts;
    }
    void set_state(int clause, int literal, std::int32_t state) {
        team_[flat_index(clause, literal)].state = state;
    }

private:
    enum class EventKind : std::uint8_t { TypeIa, TypeIb, TypeII };

    std::size_t flat_index(int clause, int literal) const {
        return static_cast<std::size_t>(clause) * static_cast<std::size_t>(literal_count()) +
               static_cast<std::size_t>(literal);
    }

    void reinforce(MvfAutomaton& automaton, EventKind kind, Rng& rng,
                   RngAccounting& accounting);
    void apply_type_i(int clause, const std::vector<std::uint8_t>& literals,
                      std::uint8_t clause_out, Rng& rng, RngAccounting& accounting);
    void apply_type_ii(int clause, const std::vector<std::uint8_t>& literals,
                       std::uint8_t clause_out, Rng& rng, RngAccounting& accounting);

    TmConfig config_;
    MvfParams params_;
    std::vector<MvfAutomaton> team_; // m x 2o, clause-major
};

} // namespace adtm

#endif
