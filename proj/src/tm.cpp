#include "adtm/tm.hpp"

#include <algorithm>
#include <stdexcept>

namespace adtm {

std::string to_string(Regime regime) {
    return regime == Regime::ClassicTm ? "classic" : "adtm";
}

Regime regime_from_string(const std::string& s) {
    if (s == "classic" || s == "tm") return Regime::ClassicTm;
    if (s == "adtm") return Regime::Adtm;
    throw std::invalid_argument("unknown regime '" + s + "' (expected adtm or classic)");
}

void TmConfig::validate() const {
    if (feature_bits < 1) throw std::invalid_argument("feature count o must be >= 1");
    if (clause_count < 2) throw std::invalid_argument("clause count m must be >= 2");
    if (clause_count % 2 != 0) throw std::invalid_argument("clause count m must be even (half per polarity)");
    if (vote_target < 1) throw std::invalid_argument("vote target T must be >= 1");
    if (strong_step < 1) throw std::invalid_argument("strong step s must be >= 1");
    if (n_states < 1) throw std::invalid_argument("state count N must be >= 1");
    if (positive_polarity_class != 0 && positive_polarity_class != 1)
        throw std::invalid_argument("positive polarity class must be 0 or 1");
}

Metrics metrics_from_confusion(std::uint64_t tp, std::uint64_t fp, std::uint64_t tn,
                               std::uint64_t fn) {
    Metrics m;
    m.tp = tp;
    m.fp = fp;
    m.tn = tn;
    m.fn = fn;
    const std::uint64_t total = tp + fp + tn + fn;
    m.accuracy = total == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(total);
    const std::uint64_t f1_denominator = 2 * tp + fp + fn;
    m.f1 = f1_denominator == 0 ? 0.0 : 2.0 * static_cast<double>(tp) / static_cast<double>(f1_denominator);
    return m;
}

double type_i_probability(int vote, int vote_target) {
    if (vote_target < 1) throw std::invalid_argument("vote target T must be >= 1");
    const int clamped = std::clamp(vote, -vote_target, vote_target);
    return static_cast<double>(vote_target - clamped) / (2.0 * vote_target);
}

double type_ii_probability(int vote, int vote_target) {
    if (vote_target < 1) throw std::invalid_argument("vote target T must be >= 1");
    const int clamped = std::clamp(vote, -vote_target, vote_target);
    return static_cast<double>(vote_target + clamped) / (2.0 * vote_target);
}

std::vector<FeedbackEvent> type_i_events(std::uint8_t clause_output,
                                         const std::vector<std::uint8_t>& literals) {
    std::vector<FeedbackEvent> events;
    events.reserve(literals.size());
    for (std::size_t k = 0; k < literals.size(); ++k) {
        if (clause_output == 1 && literals[k] == 1) {
            events.push_back({static_cast<int>(k), Action::Include, FeedbackStrength::Strong});
        } else {
            events.push_back({static_cast<int>(k), Action::Exclude, FeedbackStrength::Weak});
        }
    }
    return events;
}

std::vector<FeedbackEvent> type_ii_events(std::uint8_t clause_output,
                                          const std::vector<std::uint8_t>& literals) {
    std::vector<FeedbackEvent> events;
    if (clause_output == 0) return events;
    for (std::size_t k = 0; k < literals.size(); ++k) {
        if (literals[k] == 0)
            events.push_back({static_cast<int>(k), Action::Include, FeedbackStrength::Strong});
    }
    return events;
}

TsetlinMachine::TsetlinMachine(TmConfig config) : config_(config) {
    config_.validate();
    params_.n_states = config_.n_states;
    params_.strong_step = config_.strong_step;
    params_.d = config_.d;
    // All teams start on the exclude boundary: every literal excluded, every
    // clause empty.
    team_.assign(static_cast<std::size_t>(config_.clause_count) *
                     static_cast<std::size_t>(literal_count()),
                 MvfAutomaton{config_.n_states, 0});
}

std::vector<std::uint8_t> TsetlinMachine::make_literals(const std::vector<std::uint8_t>& x) const {
    if (static_cast<int>(x.size()) != config_.feature_bits)
        throw std::invalid_argument("feature vector length does not match configured o");
    std::vector<std::uint8_t> literals(static_cast<std::size_t>(literal_count()));
    for (int k = 0; k < config_.feature_bits; ++k) {
        literals[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)] ? 1 : 0;
        literals[static_cast<std::size_t>(k + config_.feature_bits)] =
            x[static_cast<std::size_t>(k)] ? 0 : 1;
    }
    return literals;
}

std::uint8_t TsetlinMachine::clause_output(int clause, const std::vector<std::uint8_t>& literals,
                                           ClauseMode mode) const {
    if (static_cast<int>(literals.size()) != literal_count())
        throw std::invalid_argument("literal vector length does not match 2o");
    const MvfAutomaton* team = &team_[flat_index(clause, 0)];
    bool any_included = false;
    for (int k = 0; k < literal_count(); ++k) {
        if (team[k].state > config_.n_states) {
            any_included = true;
            if (literals[static_cast<std::size_t>(k)] == 0) return 0;
        }
    }
    if (!any_included) return mode == ClauseMode::Learning ? 1 : 0;
    return 1;
}

int TsetlinMachine::class_sum(const std::vector<std::uint8_t>& literals, ClauseMode mode) const {
    int vote = 0;
    const int half = config_.clause_count / 2;
    for (int j = 0; j < config_.clause_count; ++j) {
        const int out = clause_output(j, literals, mode);
        vote += j < half ? out : -out;
    }
    return vote;
}

int TsetlinMachine::predict(const std::vector<std::uint8_t>& x) const {
    const auto literals = make_literals(x);
    const int vote = class_sum(literals, ClauseMode::Inference);
    return classify_vote(vote) == 1 ? config_.positive_polarity_class
                                    : 1 - config_.positive_polarity_class;
}

void TsetlinMachine::reinforce(MvfAutomaton& automaton, EventKind kind, Rng& rng,
                               RngAccounting& accounting) {
    accounting.transition_attempts += 1;

    if (config_.regime == Regime::Adtm) {
        const Action target = kind == EventKind::TypeIb ? Action::Exclude : Action::Include;
        const FeedbackStrength strength =
            kind == EventKind::TypeIb ? FeedbackStrength::Weak : FeedbackStrength::Strong;
        accounting.ta_update_coins +=
            static_cast<std::uint64_t>(mvf_reinforce(automaton, target, strength, params_, rng));
        return;
    }

    // Classic regime: single-step TA moves. Type Ia fires with probability
    // (s-1)/s, Type Ib with 1/s, Type II deterministically. Each event
    // consumes one uniform draw, mirroring a hardware PRNG that cycles on
    // every update.
    automaton.attempts += 1;
    accounting.ta_update_coins += 1;
    const double u = rng.uniform01();
    const double s = static_cast<double>(config_.strong_step);
    switch (kind) {
    case EventKind::TypeIa:
        if (u < (s - 1.0) / s)
            automaton.state = std::min(2 * config_.n_states, automaton.state + 1);
        break;
    case EventKind::TypeIb:
        if (u < 1.0 / s)
            automaton.state = std::max(1, automaton.state - 1);
        break;
    case EventKind::TypeII:
        automaton.state = std::min(2 * config_.n_states, automaton.state + 1);
        break;
    }
}

void TsetlinMachine::apply_type_i(int clause, const std::vector<std::uint8_t>& literals,
                                  std::uint8_t clause_out, Rng& rng,
                                  RngAccounting& accounting) {
    MvfAutomaton* team = &team_[flat_index(clause, 0)];
    for (int k = 0; k < literal_count(); ++k) {
        if (clause_out == 1 && literals[static_cast<std::size_t>(k)] == 1)
            reinforce(team[k], EventKind::TypeIa, rng, accounting);
        else
            reinforce(team[k], EventKind::TypeIb, rng, accounting);
    }
}

void TsetlinMachine::apply_type_ii(int clause, const std::vector<std::uint8_t>& literals,
                                   std::uint8_t clause_out, Rng& rng,
                                   RngAccounting& accounting) {
    if (clause_out == 0) return;
    MvfAutomaton* team = &team_[flat_index(clause, 0)];
    for (int k = 0; k < literal_count(); ++k) {
        if (literals[static_cast<std::size_t>(k)] == 0)
            reinforce(team[k], EventKind::TypeII, rng, accounting);
    }
}

void TsetlinMachine::train_sample(const std::vector<std::uint8_t>& x, int y,
                                  std::uint64_t run_seed, std::uint64_t sample_serial,
                                  RngAccounting& accounting, const TrainOptions& options) {
    if (y != 0 && y != 1) throw std::invalid_argument("label must be 0 or 1");

    const auto literals = make_literals(x);

    // Learning-mode outputs are computed once against the pre-update state;
    // all clause updates then see the same vote.
    std::vector<std::uint8_t> outputs(static_cast<std::size_t>(config_.clause_count));
    int vote = 0;
    const int half = config_.clause_count / 2;
    for (int j = 0; j < config_.clause_count; ++j) {
        outputs[static_cast<std::size_t>(j)] = clause_output(j, literals, ClauseMode::Learning);
        vote += j < half ? outputs[static_cast<std::size_t>(j)] : -outputs[static_cast<std::size_t>(j)];
    }

    const double p_type_i = type_i_probability(vote, config_.vote_target);
    const double p_type_ii = type_ii_probability(vote, config_.vote_target);

    for (int j = 0; j < config_.clause_count; ++j) {
        Rng rng = Rng::derive(run_seed, sample_serial, static_cast<std::uint64_t>(j),
                              stream::kClauseUpdate);
        const bool positive = j < half;
        const bool wants_type_i = positive == (y == config_.positive_polarity_class);
        const double p = wants_type_i ? p_type_i : p_type_ii;

        accounting.clause_selection_draws += 1;
        const bool selected = rng.uniform01() < p;
        if (!(selected || options.force_clause_selection)) continue;

        if (wants_type_i)
            apply_type_i(j, literals, outputs[static_cast<std::size_t>(j)], rng, accounting);
        else
            apply_type_ii(j, literals, outputs[static_cast<std::size_t>(j)], rng, accounting);
    }
}

FitResult TsetlinMachine::fit(const Dataset& train, const Dataset* test, int epochs,
                              std::uint64_t seed, const TrainOptions& options) {
    if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
    if (train.size() == 0) throw std::invalid_argument("training set is empty");
    if (train.feature_bits != config_.feature_bits)
        throw std::invalid_argument("training set feature width does not match configured o");

    FitResult result;
    result.curve.reserve(static_cast<std::size_t>(epochs));

    std::vector<std::size_t> order(train.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    std::uint64_t serial = 0;
    for (int epoch = 0; epoch < epochs; ++epoch) {
        if (options.shuffle) {
            Rng shuffle_rng = Rng::derive(seed, stream::kEpochShuffle,
                                          static_cast<std::uint64_t>(epoch));
            shuffle_rng.shuffle(order);
        }
        for (const std::size_t idx : order) {
            train_sample(train.rows[idx], train.labels[idx], seed, serial++,
                         result.accounting, options);
        }

        EpochMetrics em;
        em.epoch = epoch + 1;
        em.train_accuracy = evaluate(train).accuracy;
        if (test != nullptr && test->size() > 0) em.test_accuracy = evaluate(*test).accuracy;
        result.curve.push_back(em);
    }
    return result;
}

Metrics TsetlinMachine::evaluate(const Dataset& test) const {
    if (test.size() == 0) throw std::invalid_argument("evaluation set is empty");
    std::uint64_t tp = 0, fp = 0, tn = 0, fn = 0;
    for (std::size_t i = 0; i < test.size(); ++i) {
        const int predicted = predict(test.rows[i]);
        const int actual = test.labels[i];
        if (actual == 1)
            predicted == 1 ? ++tp : ++fn;
        else
            predicted == 1 ? ++fp : ++tn;
    }
    return metrics_from_confusion(tp, fp, tn, fn);
}

} // namespace adtm
