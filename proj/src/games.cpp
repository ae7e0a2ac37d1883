#include "rtsolve/games.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rtsolve {

namespace {

// Reference to one player sequence while the game tree is being walked:
// (infoset, action) with infoset == -1 for the empty sequence.
struct SeqRef {
    int infoset = -1;
    int action = 0;
};

// Accumulates infosets keyed by the acting player's observation and terminal
// payoff entries keyed by sequence pairs, then emits a GameForm whose
// infosets are reindexed bottom-up (deepest first).
class GameBuilder {
public:
    int decision(int player, const std::string& key, int num_actions, SeqRef parent) {
        auto& map = key_to_id_[player - 1];
        auto it = map.find(key);
        if (it != map.end()) {
            const Raw& r = raw_[player - 1][it->second];
            if (r.num_actions != num_actions || r.parent.infoset != parent.infoset ||
                (parent.infoset >= 0 && r.parent.action != parent.action))
                throw std::logic_error("inconsistent infoset observation (imperfect recall?)");
            return it->second;
        }
        Raw r;
        r.parent = parent;
        r.num_actions = num_actions;
        r.depth = parent.infoset < 0 ? 0 : raw_[player - 1][parent.infoset].depth + 1;
        int id = static_cast<int>(raw_[player - 1].size());
        raw_[player - 1].push_back(r);
        map.emplace(key, id);
        return id;
    }

    void terminal(SeqRef s1, SeqRef s2, double value) {
        terminals_.push_back({s1, s2, value});
    }

    GameForm build() const {
        GameForm g;
        g.tp1.player = 1;
        g.tp2.player = 2;
        std::vector<int> remap[2];        // raw infoset id -> final id
        std::vector<int> first_seq[2];    // final id -> first sequence
        for (int p = 0; p < 2; ++p) {
            const auto& raw = raw_[p];
            std::vector<int> order(raw.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return raw[a].depth > raw[b].depth; });
            remap[p].assign(raw.size(), -1);
            for (size_t i = 0; i < order.size(); ++i) remap[p][order[i]] = static_cast<int>(i);

            Treeplex& tp = (p == 0) ? g.tp1 : g.tp2;
            tp.infosets.resize(raw.size());
            first_seq[p].assign(raw.size(), 0);
            int next_seq = 1;
            for (size_t i = 0; i < order.size(); ++i) {
                const Raw& r = raw[order[i]];
                Infoset& I = tp.infosets[i];
                I.num_actions = r.num_actions;
                I.first_seq = next_seq;
                first_seq[p][i] = next_seq;
                next_seq += r.num_actions;
            }
            for (size_t i = 0; i < order.size(); ++i) {
                const Raw& r = raw[order[i]];
                tp.infosets[i].parent_seq =
                    r.parent.infoset < 0
                        ? 0
                        : first_seq[p][remap[p][r.parent.infoset]] + r.parent.action;
            }
            tp.num_sequences = next_seq;
        }

        auto final_seq = [&](int p, SeqRef s) {
            return s.infoset < 0 ? 0 : first_seq[p][remap[p][s.infoset]] + s.action;
        };
        std::map<std::pair<int, int>, double> merged;
        for (const RawTerminal& t : terminals_)
            merged[{final_seq(0, t.s1), final_seq(1, t.s2)}] += t.value;
        g.entries.reserve(merged.size());
        for (const auto& [key, v] : merged) g.entries.push_back({key.first, key.second, v});
        g.finalize();
        return g;
    }

private:
    struct Raw {
        SeqRef parent;
        int num_actions = 0;
        int depth = 0;
    };
    struct RawTerminal {
        SeqRef s1, s2;
        double value;
    };
    std::unordered_map<std::string, int> key_to_id_[2];
    std::vector<Raw> raw_[2];
    std::vector<RawTerminal> terminals_;
};

uint64_t splitmix64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform_pm1(uint64_t& state) {
    return 2.0 * ((splitmix64(state) >> 11) * 0x1.0p-53) - 1.0;
}

// -------------------------------------------------------------------------
// Poker betting round shared by Kuhn and Leduc. Grammar with player 1 acting
// first: check/bet while no bet is outstanding; fold/call(/raise while fewer
// than max_bets bets have been made) facing a bet. Contributions track each
// player's money in the pot.
struct RoundOutcome {
    std::string history;  // e.g. "kbrc"
    double contrib1, contrib2;
    int folded;  // 0 = showdown/continue, 1 or 2 = that player folded
    SeqRef last1, last2;
};

template <typename Decision>
void walk_betting_round(Decision&& decide, double c1, double c2, double bet_size, int max_bets,
                        SeqRef last1, SeqRef last2, std::string history, int actor, int bets,
                        bool facing_bet, const std::function<void(const RoundOutcome&)>& done) {
    auto contrib = [&](int p) -> double& { return p == 1 ? c1 : c2; };
    int other = 3 - actor;
    if (!facing_bet) {
        // check
        {
            SeqRef l1 = last1, l2 = last2;
            SeqRef s = decide(actor, history, 2, actor == 1 ? last1 : last2);
            s.action = 0;
            (actor == 1 ? l1 : l2) = s;
            if (actor == 2 || history.size() > 0) {
                // second check closes the round (or single-check games)
            }
            if (actor == 1)
                walk_betting_round(decide, c1, c2, bet_size, max_bets, l1, l2, history + "k",
                                   other, bets, false, done);
            else
                done({history + "k", c1, c2, 0, l1, l2});
        }
        // bet
        {
            SeqRef l1 = last1, l2 = last2;
            SeqRef s = decide(actor, history, 2, actor == 1 ? last1 : last2);
            s.action = 1;
            (actor == 1 ? l1 : l2) = s;
            double nc1 = c1, nc2 = c2;
            (actor == 1 ? nc1 : nc2) = contrib(other) + bet_size;
            walk_betting_round(decide, nc1, nc2, bet_size, max_bets, l1, l2, history + "b",
                               other, bets + 1, true, done);
        }
    } else {
        bool can_raise = bets < max_bets;
        int na = can_raise ? 3 : 2;
        // fold
        {
            SeqRef l1 = last1, l2 = last2;
            SeqRef s = decide(actor, history, na, actor == 1 ? last1 : last2);
            s.action = 0;
            (actor == 1 ? l1 : l2) = s;
            done({history + "f", c1, c2, actor, l1, l2});
        }
        // call
        {
            SeqRef l1 = last1, l2 = last2;
            SeqRef s = decide(actor, history, na, actor == 1 ? last1 : last2);
            s.action = 1;
            (actor == 1 ? l1 : l2) = s;
            double nc1 = c1, nc2 = c2;
            (actor == 1 ? nc1 : nc2) = contrib(other);
            done({history + "c", nc1, nc2, 0, l1, l2});
        }
        if (can_raise) {
            SeqRef l1 = last1, l2 = last2;
            SeqRef s = decide(actor, history, na, actor == 1 ? last1 : last2);
            s.action = 2;
            (actor == 1 ? l1 : l2) = s;
            double nc1 = c1, nc2 = c2;
            (actor == 1 ? nc1 : nc2) = contrib(other) + bet_size;
            walk_betting_round(decide, nc1, nc2, bet_size, max_bets, l1, l2, history + "r",
                               other, bets + 1, true, done);
        }
    }
}

}  // namespace

GameForm build_matrix_game(int n, int m, uint64_t seed) {
    if (n < 1 || m < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
    GameBuilder b;
    int i1 = b.decision(1, "root", n, {});
    int i2 = b.decision(2, "root", m, {});
    uint64_t state = seed;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            b.terminal({i1, i}, {i2, j}, uniform_pm1(state));
    return b.build();
}

GameForm build_kuhn(int n) {
    if (n < 2) throw std::invalid_argument("kuhn requires n >= 2 cards");
    GameBuilder b;
    double chance = 1.0 / (static_cast<double>(n) * (n - 1));
    for (int c1 = 0; c1 < n; ++c1) {
        for (int c2 = 0; c2 < n; ++c2) {
            if (c1 == c2) continue;
            auto decide = [&](int player, const std::string& hist, int na, SeqRef parent) {
                int card = player == 1 ? c1 : c2;
                return SeqRef{b.decision(player, std::to_string(player) + ":" +
                                                     std::to_string(card) + ":" + hist,
                                         na, parent),
                              0};
            };
            walk_betting_round(
                decide, 1.0, 1.0, 1.0, 1, {}, {}, "", 1, 0, false,
                [&](const RoundOutcome& o) {
                    double u1;
                    if (o.folded == 1)
                        u1 = -o.contrib1;
                    else if (o.folded == 2)
                        u1 = o.contrib2;
                    else
                        u1 = c1 > c2 ? o.contrib2 : -o.contrib1;
                    b.terminal(o.last1, o.last2, chance * u1);
                });
        }
    }
    return b.build();
}

GameForm build_leduc(int n) {
    if (n < 2) throw std::invalid_argument("leduc requires n >= 2 ranks");
    GameBuilder b;
    const int deck = 2 * n;  // two suits per rank
    const double total = static_cast<double>(deck) * (deck - 1) * (deck - 2);
    for (int r1 = 0; r1 < n; ++r1) {
        for (int r2 = 0; r2 < n; ++r2) {
            for (int rb = 0; rb < n; ++rb) {
                // multiplicity of this rank triple over distinct cards
                int mult;
                if (r1 == r2 && r2 == rb)
                    mult = 0;
                else if (r1 == r2 || r1 == rb || r2 == rb)
                    mult = 4;
                else
                    mult = 8;
                if (mult == 0) continue;
                double chance = mult / total;

                auto decide1 = [&](int player, const std::string& hist, int na, SeqRef parent) {
                    int rank = player == 1 ? r1 : r2;
                    return SeqRef{b.decision(player, std::to_string(player) + ":" +
                                                         std::to_string(rank) + ":" + hist,
                                             na, parent),
                                  0};
                };
                auto settle = [&](const RoundOutcome& o) {
                    double u1;
                    if (o.folded == 1)
                        u1 = -o.contrib1;
                    else if (o.folded == 2)
                        u1 = o.contrib2;
                    else if (r1 == rb)
                        u1 = o.contrib2;
                    else if (r2 == rb)
                        u1 = -o.contrib1;
                    else if (r1 != r2)
                        u1 = r1 > r2 ? o.contrib2 : -o.contrib1;
                    else
                        u1 = 0.0;
                    b.terminal(o.last1, o.last2, chance * u1);
                };
                walk_betting_round(
                    decide1, 1.0, 1.0, 2.0, 2, {}, {}, "", 1, 0, false,
                    [&](const RoundOutcome& r) {
                        if (r.folded != 0) {
                            // fold pre-reveal; entries merge across board ranks
                            settle(r);
                            return;
                        }
                        auto decide2 = [&](int player, const std::string& hist, int na,
                                           SeqRef parent) {
                            int rank = player == 1 ? r1 : r2;
                            return SeqRef{
                                b.decision(player, std::to_string(player) + ":" +
                                                       std::to_string(rank) + ":" + r.history +
                                                       "/" + std::to_string(rb) + ":" + hist,
                                           na, parent),
                                0};
                        };
                        walk_betting_round(decide2, r.contrib1, r.contrib2, 4.0, 2, r.last1,
                                           r.last2, "", 1, 0, false, settle);
                    });
            }
        }
    }
    return b.build();
}

GameForm build_goofspiel(int k) {
    if (k < 2) throw std::invalid_argument("goofspiel requires k >= 2");
    GameBuilder b;
    std::vector<int> prizes(k);
    std::iota(prizes.begin(), prizes.end(), 1);
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    const double chance = 1.0 / fact;

    // Bids are revealed after every turn; only the current turn's bid is
    // hidden from the opponent.
    struct Frame {
        int hand1, hand2;  // bitmasks of cards 1..k still in hand
        std::string obs;   // revealed prizes and both players' past bids
        SeqRef last1, last2;
        double score1, score2;
    };
    std::function<void(const std::vector<int>&, int, Frame)> turn =
        [&](const std::vector<int>& order, int t, Frame f) {
            if (t == k) {
                b.terminal(f.last1, f.last2, chance * (f.score1 - f.score2));
                return;
            }
            int prize = order[t];
            std::string obs = f.obs + "P" + std::to_string(prize) + ";";
            for (int c1 = 1; c1 <= k; ++c1) {
                if (!(f.hand1 & (1 << c1))) continue;
                int n1 = __builtin_popcount(static_cast<unsigned>(f.hand1));
                int a1 = 0;
                for (int c = 1; c < c1; ++c)
                    if (f.hand1 & (1 << c)) ++a1;
                SeqRef s1{b.decision(1, "1:" + obs, n1, f.last1), a1};
                for (int c2 = 1; c2 <= k; ++c2) {
                    if (!(f.hand2 & (1 << c2))) continue;
                    int n2 = __builtin_popcount(static_cast<unsigned>(f.hand2));
                    int a2 = 0;
                    for (int c = 1; c < c2; ++c)
                        if (f.hand2 & (1 << c)) ++a2;
                    SeqRef s2{b.decision(2, "2:" + obs, n2, f.last2), a2};
                    Frame nf = f;
                    nf.hand1 &= ~(1 << c1);
                    nf.hand2 &= ~(1 << c2);
                    nf.obs = obs + "b" + std::to_string(c1) + "," + std::to_string(c2) + ";";
                    nf.last1 = s1;
                    nf.last2 = s2;
                    if (c1 > c2)
                        nf.score1 += prize;
                    else if (c2 > c1)
                        nf.score2 += prize;
                    else {
                        nf.score1 += prize / 2.0;
                        nf.score2 += prize / 2.0;
                    }
                    turn(order, t + 1, nf);
                }
            }
        };

    std::vector<int> order = prizes;
    std::sort(order.begin(), order.end());
    do {
        Frame f;
        f.hand1 = f.hand2 = ((1 << (k + 1)) - 2);
        f.score1 = f.score2 = 0.0;
        turn(order, 0, f);
    } while (std::next_permutation(order.begin(), order.end()));
    return b.build();
}

GameForm build_liars_dice(int k) {
    if (k < 2) throw std::invalid_argument("liarsdice requires k >= 2 sides");
    GameBuilder b;
    const int num_claims = 2 * k;  // quantities 1..2 of faces 1..k, ordered
    const double chance = 1.0 / (static_cast<double>(k) * k);

    std::function<void(int, int, std::string, int, int, SeqRef, SeqRef)> node =
        [&](int d1, int d2, std::string hist, int last_claim, int actor, SeqRef l1, SeqRef l2) {
            int na = (num_claims - 1 - last_claim) + (last_claim >= 0 ? 1 : 0);
            int die = actor == 1 ? d1 : d2;
            int iid = b.decision(actor,
                                 std::to_string(actor) + ":" + std::to_string(die) + ":" + hist,
                                 na, actor == 1 ? l1 : l2);
            int a = 0;
            for (int c = last_claim + 1; c < num_claims; ++c, ++a) {
                SeqRef nl1 = l1, nl2 = l2;
                (actor == 1 ? nl1 : nl2) = {iid, a};
                node(d1, d2, hist + "," + std::to_string(c), c, 3 - actor, nl1, nl2);
            }
            if (last_claim >= 0) {
                SeqRef nl1 = l1, nl2 = l2;
                (actor == 1 ? nl1 : nl2) = {iid, a};
                int q = last_claim / k + 1;
                int face = last_claim % k + 1;
                int count = (d1 == face ? 1 : 0) + (d2 == face ? 1 : 0);
                bool claim_true = count >= q;
                // +1 to the winner of the challenge: the claimant (the other
                // player) if the claim holds, otherwise the challenger.
                int winner = claim_true ? 3 - actor : actor;
                b.terminal(nl1, nl2, chance * (winner == 1 ? 1.0 : -1.0));
            }
        };
    for (int d1 = 1; d1 <= k; ++d1)
        for (int d2 = 1; d2 <= k; ++d2)
            node(d1, d2, "", -1, 1, {}, {});
    return b.build();
}

GameSpec GameSpec::parse(const std::string& id) {
    GameSpec s;
    auto parts = std::vector<std::string>{};
    size_t start = 0;
    while (true) {
        size_t pos = id.find(':', start);
        parts.push_back(id.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    auto need = [&](size_t n) {
        if (parts.size() != n) throw std::invalid_argument("bad game id: " + id);
    };
    if (parts[0] == "matrix") {
        need(3);
        size_t x = parts[1].find('x');
        if (x == std::string::npos) throw std::invalid_argument("bad game id: " + id);
        s.kind = GameKind::Matrix;
        s.n = std::stoi(parts[1].substr(0, x));
        s.m = std::stoi(parts[1].substr(x + 1));
        s.seed = std::stoull(parts[2]);
    } else if (parts[0] == "kuhn") {
        need(2);
        s.kind = GameKind::Kuhn;
        s.n = std::stoi(parts[1]);
    } else if (parts[0] == "leduc") {
        need(2);
        s.kind = GameKind::Leduc;
        s.n = std::stoi(parts[1]);
    } else if (parts[0] == "goofspiel") {
        need(2);
        s.kind = GameKind::Goofspiel;
        s.n = std::stoi(parts[1]);
    } else if (parts[0] == "liarsdice") {
        need(2);
        s.kind = GameKind::LiarsDice;
        s.n = std::stoi(parts[1]);
    } else {
        throw std::invalid_argument("unknown game id: " + id);
    }
    return s;
}

std::string GameSpec::id() const {
    switch (kind) {
        case GameKind::Matrix:
            return "matrix:" + std::to_string(n) + "x" + std::to_string(m) + ":" +
                   std::to_string(seed);
        case GameKind::Kuhn:
            return "kuhn:" + std::to_string(n);
        case GameKind::Leduc:
            return "leduc:" + std::to_string(n);
        case GameKind::Goofspiel:
            return "goofspiel:" + std::to_string(n);
        case GameKind::LiarsDice:
            return "liarsdice:" + std::to_string(n);
    }
    return "";
}

GameForm build_game(const GameSpec& spec) {
    switch (spec.kind) {
        case GameKind::Matrix:
            return build_matrix_game(spec.n, spec.m, spec.seed);
        case GameKind::Kuhn:
            return build_kuhn(spec.n);
        case GameKind::Leduc:
            return build_leduc(spec.n);
        case GameKind::Goofspiel:
            return build_goofspiel(spec.n);
        case GameKind::LiarsDice:
            return build_liars_dice(spec.n);
    }
    throw std::invalid_argument("unknown game kind");
}

GameStats game_stats(const GameForm& g) {
    GameStats s;
    s.infosets = static_cast<long long>(g.tp1.infosets.size() + g.tp2.infosets.size());
    s.sequences = g.tp1.num_sequences + g.tp2.num_sequences;
    s.leaves = static_cast<long long>(g.entries.size());
    return s;
}

}  // namespace rtsolve
