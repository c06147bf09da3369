#include "adtm/automata.hpp"

#include <algorithm>

namespace adtm {

Determinism Determinism::parse(const std::string& token) {
    if (token == "inf" || token == "INF" || token == "infinity") return infinite();
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid determinism value '" + token + "' (expected integer >= 1 or 'inf')");
    }
    if (pos != token.size())
        throw std::invalid_argument("invalid determinism value '" + token + "' (expected integer >= 1 or 'inf')");
    return finite(value);
}

std::string Determinism::to_string() const {
    return is_infinite() ? "inf" : std::to_string(period_);
}

int ta_transition(int state, int n_states, Response response) {
    if (response == Response::Reward) {
        if (state <= n_states) return std::max(1, state - 1);
        return std::min(2 * n_states, state + 1);
    }
    // Penalty: toward the middle; N -> N+1 and N+1 -> N cross over.
    return state <= n_states ? state + 1 : state - 1;
}

int krinsky_transition(int state, int n_states, Response response) {
    if (response == Response::Penalty) return ta_transition(state, n_states, response);
    return state <= n_states ? 1 : 2 * n_states;
}

int krylov_transition(int state, int n_states, Response response, bool coin_heads) {
    if (response == Response::Reward) return ta_transition(state, n_states, response);
    return coin_heads ? ta_transition(state, n_states, response) : state;
}

int mvf_reinforce(MvfAutomaton& a, Action target, FeedbackStrength strength,
                  const MvfParams& params, Rng& coin_source) {
    a.attempts += 1;

    int coins = 0;
    bool execute = true;
    if (!params.d.is_infinite() && a.attempts % params.d.period() == 0) {
        coins = 1;
        execute = coin_source.coin();
    }
    if (execute) {
        const int step = strength == FeedbackStrength::Strong ? params.strong_step : 1;
        if (target == Action::Include) {
            a.state = std::min(2 * params.n_states, a.state + step);
        } else {
            a.state = std::max(1, a.state - step);
        }
    }
    return coins;
}

AutomatonKind parse_automaton_kind(const std::string& token) {
    if (token == "ta") return AutomatonKind::Ta;
    if (token == "krinsky") return AutomatonKind::Krinsky;
    if (token == "krylov") return AutomatonKind::Krylov;
    throw std::invalid_argument("unknown automaton kind '" + token + "' (expected ta, krinsky or krylov)");
}

ConvergenceReport simulate_two_armed(AutomatonKind kind, double reward_prob_a,
                                     double reward_prob_b, long steps, int trials,
                                     int n_states, std::uint64_t seed) {
    if (reward_prob_a < 0.0 || reward_prob_a > 1.0 || reward_prob_b < 0.0 || reward_prob_b > 1.0)
        throw std::invalid_argument("reward probabilities must lie in [0, 1]");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (n_states < 1) throw std::invalid_argument("N must be >= 1");

    const Action optimal = reward_prob_a >= reward_prob_b ? Action::Exclude : Action::Include;

    ConvergenceReport report;
    report.trials = trials;
    report.steps = steps;

    int optimal_count = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::derive(seed, stream::kBandit, static_cast<std::uint64_t>(t));
        // Unbiased start on one of the two boundary states.
        int state = rng.coin() ? n_states : n_states + 1;
        for (long i = 0; i < steps; ++i) {
            const Action arm = action_of(state, n_states);
            const double p = arm == Action::Exclude ? reward_prob_a : reward_prob_b;
            const Response response = rng.uniform01() < p ? Response::Reward : Response::Penalty;
            switch (kind) {
            case AutomatonKind::Ta:
                state = ta_transition(state, n_states, response);
                break;
            case AutomatonKind::Krinsky:
                state = krinsky_transition(state, n_states, response);
                break;
            case AutomatonKind::Krylov:
                if (response == Response::Penalty) {
                    state = krylov_transition(state, n_states, response, rng.coin());
                    report.coins_used += 1;
                } else {
                    state = krylov_transition(state, n_states, response, true);
                }
                break;
            }
        }
        if (action_of(state, n_states) == optimal) ++optimal_count;
    }
    report.optimal_fraction = static_cast<double>(optimal_count) / static_cast<double>(trials);
    return report;
}

} // namespace adtm
