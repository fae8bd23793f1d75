#include "nevan/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>
#include <set>
#include <stdexcept>

namespace nevan {

BoundaryStepFunction::BoundaryStepFunction(Domain d, std::vector<double> breaks, std::vector<double> values)
    : domain_(d), breaks_(std::move(breaks)), values_(std::move(values)) {
    if (breaks_.empty() && values_.empty()) return;
    if (breaks_.size() != values_.size() + 1) throw std::invalid_argument("step function needs one more break than values");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i] > breaks_[i - 1])) throw std::invalid_argument("step function breaks must increase strictly");
    for (double v : values_)
        if (!(v >= 0.0)) throw std::invalid_argument("step function values must be nonnegative");
}

namespace {

double measure_scale(Domain d) { return d == Domain::Circle ? 1.0 / kTwoPi : 1.0; }

}  // namespace

double BoundaryStepFunction::operator()(double x) const {
    if (values_.empty()) return 0.0;
    if (domain_ == Domain::Circle) x = normalize_angle(x);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    if (it == breaks_.begin() || it == breaks_.end()) return 0.0;
    return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

double BoundaryStepFunction::integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * (breaks_[i + 1] - breaks_[i]);
    return s * measure_scale(domain_);
}

double BoundaryStepFunction::measure_above(double t) const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] > t) s += breaks_[i + 1] - breaks_[i];
    return s * measure_scale(domain_);
}

BoundaryStepFunction BoundaryStepFunction::scaled(double s) const {
    if (!(s >= 0.0)) throw std::invalid_argument("scale must be nonnegative");
    std::vector<double> v(values_);
    for (double& x : v) x *= s;
    return BoundaryStepFunction(domain_, breaks_, std::move(v));
}

BoundaryStepFunction BoundaryStepFunction::restricted(Interval w) const {
    std::vector<double> b, v;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        double lo = std::max(breaks_[i], w.lo);
        double hi = std::min(breaks_[i + 1], w.hi);
        if (!(hi > lo)) continue;
        if (b.empty() || b.back() != lo) {
            if (!b.empty()) v.push_back(0.0);
            b.push_back(lo);
        }
        b.push_back(hi);
        v.push_back(values_[i]);
    }
    return BoundaryStepFunction(domain_, std::move(b), std::move(v));
}

bool Bump::inside(double x) const {
    for (const auto& p : pieces)
        if (p.contains(x)) return true;
    return false;
}

double evaluate_bump(const Bump& b, Domain d, double x) {
    if (d == Domain::Circle) x = normalize_angle(x);
    if (b.inside(x)) return b.height;
    double dist = d == Domain::Circle ? circular_distance(x, b.center) : std::fabs(x - b.center);
    double u = dist / b.halfwidth;
    return b.height * 2.0 / (1.0 + std::max(1.0, u));
}

double evaluate_envelope(const BumpEnvelope& e, double x) {
    double best = 0.0;
    for (const auto& b : e.bumps) best = std::max(best, evaluate_bump(b, e.domain, x));
    return best;
}

namespace {

std::vector<Interval> arc_pieces(const Arc& arc) {
    if (arc.is_full()) return {{0.0, kTwoPi}};
    double e = arc.end();
    if (e <= kTwoPi) return {{arc.start, e}};
    return {{arc.start, kTwoPi}, {0.0, e - kTwoPi}};
}

struct WeightedPiece {
    Interval piece;
    double value;
};

BoundaryStepFunction sweep(Domain d, const std::vector<WeightedPiece>& pieces, bool sum) {
    struct Event {
        double x;
        int kind;  // 0 = end, 1 = start
        double value;
    };
    std::vector<Event> ev;
    for (const auto& p : pieces) {
        if (!(p.piece.hi > p.piece.lo) || p.value <= 0.0) continue;
        ev.push_back({p.piece.lo, 1, p.value});
        ev.push_back({p.piece.hi, 0, p.value});
    }
    if (ev.empty()) return BoundaryStepFunction(d, {}, {});
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.kind < b.kind;
    });
    std::multiset<double> active;
    double running = 0.0;
    std::vector<double> breaks, values;
    std::size_t i = 0;
    while (i < ev.size()) {
        double x = ev[i].x;
        while (i < ev.size() && ev[i].x == x) {
            if (ev[i].kind == 1) {
                active.insert(ev[i].value);
                running += ev[i].value;
            } else {
                active.erase(active.find(ev[i].value));
                running -= ev[i].value;
            }
            ++i;
        }
        if (active.empty()) running = 0.0;
        if (i == ev.size()) break;
        double v = active.empty() ? 0.0 : (sum ? running : *active.rbegin());
        if (breaks.empty()) {
            breaks.push_back(x);
            values.push_back(v);
        } else if (values.back() == v) {
            // extend the current step
        } else {
            breaks.push_back(x);
            values.push_back(v);
        }
    }
    breaks.push_back(ev.back().x);
    while (!values.empty() && values.back() == 0.0) {
        values.pop_back();
        breaks.pop_back();
    }
    return BoundaryStepFunction(d, std::move(breaks), std::move(values));
}

std::vector<WeightedPiece> shadow_pieces(const PointSequence& seq, std::span<const double> phi, double alpha) {
    if (phi.size() != seq.size()) throw std::invalid_argument("value channel length must match the sequence");
    std::vector<WeightedPiece> out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!(phi[i] >= 0.0)) throw std::invalid_argument("maximal functions need nonnegative values");
        auto arc = shadow(seq[i], alpha);
        if (!arc) continue;
        for (const auto& p : arc_pieces(*arc)) out.push_back({p, phi[i]});
    }
    return out;
}

void check_line_inputs(std::span<const double> x, std::span<const double> y, std::span<const double> phi) {
    if (x.size() != y.size() || x.size() != phi.size()) throw std::invalid_argument("half-plane inputs differ in length");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] > 0.0)) throw std::invalid_argument("half-plane points need y > 0");
        if (!(phi[i] >= 0.0)) throw std::invalid_argument("maximal functions need nonnegative values");
    }
}

}  // namespace

BoundaryStepFunction nontangential_max(const PointSequence& seq, std::span<const double> phi, double alpha) {
    return sweep(Domain::Circle, shadow_pieces(seq, phi, alpha), false);
}

BoundaryStepFunction shadow_sum(const PointSequence& seq, std::span<const double> phi, double alpha) {
    return sweep(Domain::Circle, shadow_pieces(seq, phi, alpha), true);
}

BoundaryStepFunction nontangential_max_line(std::span<const double> x, std::span<const double> y,
                                            std::span<const double> phi) {
    check_line_inputs(x, y, phi);
    std::vector<WeightedPiece> pieces;
    for (std::size_t i = 0; i < x.size(); ++i) pieces.push_back({{x[i] - y[i], x[i] + y[i]}, phi[i]});
    return sweep(Domain::Line, pieces, false);
}

double hl_star_indicator(const Arc& arc, double theta) {
    if (arc.is_full() || arc.contains(theta)) return 1.0;
    double d = std::min(circular_distance(theta, arc.start), circular_distance(theta, arc.end()));
    return arc.length / (arc.length + d);
}

double hl_star_indicator_line(Interval I, double x) {
    if (!(I.hi > I.lo)) throw std::invalid_argument("interval must have positive length");
    if (I.contains(x)) return 1.0;
    double d = x < I.lo ? I.lo - x : x - I.hi;
    return I.length() / (I.length() + d);
}

BumpEnvelope phi_sharp(const PointSequence& seq, std::span<const double> phi, double alpha) {
    if (phi.size() != seq.size()) throw std::invalid_argument("value channel length must match the sequence");
    BumpEnvelope e;
    e.domain = Domain::Circle;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!(phi[i] >= 0.0)) throw std::invalid_argument("maximal functions need nonnegative values");
        if (phi[i] == 0.0) continue;
        auto arc = shadow(seq[i], alpha);
        if (!arc) continue;
        Bump b;
        b.center = arc->is_full() ? 0.0 : arc->center();
        b.halfwidth = 0.5 * arc->length;
        b.height = phi[i];
        b.pieces = arc_pieces(*arc);
        e.bumps.push_back(std::move(b));
    }
    return e;
}

BumpEnvelope phi_sharp_line(std::span<const double> x, std::span<const double> y, std::span<const double> phi,
                            std::optional<Interval> window) {
    check_line_inputs(x, y, phi);
    BumpEnvelope e;
    e.domain = Domain::Line;
    e.window = window;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (phi[i] == 0.0) continue;
        Bump b;
        b.center = x[i];
        b.halfwidth = y[i];
        b.height = phi[i];
        b.pieces = {{x[i] - y[i], x[i] + y[i]}};
        e.bumps.push_back(std::move(b));
    }
    return e;
}

namespace {

// Superlevel sets of bumps: {φχ* > t} = {|x - c| < h(2φ/t - 1)} for t < φ.
class EnvelopeMeasurer {
public:
    explicit EnvelopeMeasurer(const BumpEnvelope& e) : domain_(e.domain), window_(e.window) {
        std::vector<std::size_t> order(e.bumps.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return e.bumps[a].center < e.bumps[b].center; });
        for (std::size_t i : order) {
            c_.push_back(e.bumps[i].center);
            h_.push_back(e.bumps[i].halfwidth);
            phi_.push_back(e.bumps[i].height);
        }
    }

    std::size_t size() const { return c_.size(); }
    double center(std::size_t i) const { return c_[i]; }
    double halfwidth(std::size_t i) const { return h_[i]; }
    double height(std::size_t i) const { return phi_[i]; }
    double total() const {
        if (domain_ == Domain::Circle) return 1.0;
        return window_ ? window_->length() : std::numeric_limits<double>::infinity();
    }

    // inclusive: bumps with φ ≥ t count with radius h(2φ/t - 1) ≥ h, which is
    // the limit of |{f > s}| as s increases to t.
    double measure(double t, bool inclusive) const {
        std::vector<Interval> comps;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (inclusive ? !(phi_[i] >= t) : !(phi_[i] > t)) continue;
            double R = h_[i] * (2.0 * phi_[i] / t - 1.0);
            if (domain_ == Domain::Circle && R >= kPi) return 1.0;
            Interval cur{c_[i] - R, c_[i] + R};
            while (!comps.empty() && comps.back().hi >= cur.lo) {
                cur.lo = std::min(cur.lo, comps.back().lo);
                cur.hi = std::max(cur.hi, comps.back().hi);
                comps.pop_back();
            }
            comps.push_back(cur);
        }
        if (domain_ == Domain::Line) {
            double s = 0.0;
            for (const auto& iv : comps) {
                double lo = iv.lo, hi = iv.hi;
                if (window_) {
                    lo = std::max(lo, window_->lo);
                    hi = std::min(hi, window_->hi);
                }
                if (hi > lo) s += hi - lo;
            }
            return s;
        }
        std::vector<Interval> pieces;
        for (const auto& iv : comps) {
            if (iv.hi - iv.lo >= kTwoPi) return 1.0;
            for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
                double lo = std::max(iv.lo + shift, 0.0);
                double hi = std::min(iv.hi + shift, kTwoPi);
                if (hi > lo) pieces.push_back({lo, hi});
            }
        }
        std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        double s = 0.0, lo = 0.0, hi = -1.0;
        for (const auto& p : pieces) {
            if (p.lo > hi) {
                if (hi > lo) s += hi - lo;
                lo = p.lo;
                hi = p.hi;
            } else {
                hi = std::max(hi, p.hi);
            }
        }
        if (hi > lo) s += hi - lo;
        return std::min(s / kTwoPi, 1.0);
    }

    Domain domain() const { return domain_; }
    const std::optional<Interval>& window() const { return window_; }

private:
    Domain domain_;
    std::optional<Interval> window_;
    std::vector<double> c_, h_, phi_;
};

// In s = 1/t a bump's superlevel interval is [l_i(s), r_i(s)] with
// r_i = c_i - h_i + 2a_i s, l_i = c_i + h_i - 2a_i s and a_i = h_i φ_i, active
// for s ≥ 1/φ_i. The measure m(s) is piecewise linear and t·m = m(s)/s is
// monotone on each piece, so its sup sits at a jump (activation) or a concave
// kink: two components meeting, or an end crossing a window edge. The sweep
// below finds every meeting exactly.
class MergeSweep {
public:
    explicit MergeSweep(const EnvelopeMeasurer& em) : em_(em), circle_(em.domain() == Domain::Circle) {
        for (std::size_t i = 0; i < em.size(); ++i) a_.push_back(em.halfwidth(i) * em.height(i));
    }

    std::vector<double> run() {
        const std::size_t n = em_.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return em_.height(x) > em_.height(y); });
        for (std::size_t i : order) {
            levels_.push_back(em_.height(i));
            events_.push({1.0 / em_.height(i), 0, i, 0});
        }
        while (!events_.empty() && !covered_) {
            auto [s, kind, id, version] = events_.top();
            events_.pop();
            now_ = s;
            std::size_t at = id;
            if (kind == 0) {
                Comp c;
                c.right = {{id, 0.0}};
                c.left = {{id, 0.0}};
                comps_.emplace(id, std::move(c));
            } else {
                auto it = comps_.find(id);
                if (it == comps_.end() || it->second.version != version) continue;
                auto [nx, shift] = successor(it);
                auto hit = meet(it->second, nx->second, shift);
                levels_.push_back(hit.level);
                if (nx == it) break;  // the circle is covered from here on
                at = join(it, nx, shift);
            }
            at = absorb(at);
            if (covered_) break;
            reschedule(at);
        }
        return levels_;
    }

private:
    struct Member {
        std::size_t i;
        double shift;
    };
    struct Comp {
        std::vector<Member> right, left;  // owners that can still carry each end
        std::size_t version = 0;
    };
    struct Hit {
        double s;
        double level;
    };
    using Map = std::map<std::size_t, Comp>;  // keyed by the first bump index (bumps sorted by center)
    using Event = std::tuple<double, int, std::size_t, std::size_t>;  // s, kind, component, version

    double slope(const Member& m) const { return 2.0 * a_[m.i]; }
    // value at s = 0 of r (right) or -l (left)
    double base(const Member& m, bool right) const {
        double c = em_.center(m.i) + m.shift;
        return right ? c - em_.halfwidth(m.i) : -(c + em_.halfwidth(m.i));
    }

    Hit meet(const Comp& A, const Comp& B, double shift) const {
        Hit best{std::numeric_limits<double>::infinity(), 0.0};
        for (const auto& p : A.right)
            for (const auto& q : B.left) {
                double d = em_.center(q.i) + q.shift + shift - em_.center(p.i) - p.shift;
                double num = d + em_.halfwidth(p.i) + em_.halfwidth(q.i);
                double sum = 2.0 * (a_[p.i] + a_[q.i]);
                double s = num / sum;
                if (s < best.s) best = {s, sum / num};
            }
        return best;
    }

    std::pair<Map::iterator, double> successor(Map::iterator it) {
        auto nx = std::next(it);
        if (nx != comps_.end()) return {nx, 0.0};
        if (!circle_) return {comps_.end(), 0.0};
        return {comps_.begin(), kTwoPi};
    }

    // Keeps the lines that can still be extremal for some s ≥ now.
    std::vector<Member> prune(std::vector<Member> ms, bool right) const {
        auto val = [&](const Member& m, double s) { return base(m, right) + slope(m) * s; };
        std::sort(ms.begin(), ms.end(), [&](const Member& x, const Member& y) {
            if (slope(x) != slope(y)) return slope(x) < slope(y);
            return val(x, now_) > val(y, now_);
        });
        std::vector<Member> hull;
        for (const auto& m : ms) {
            if (!hull.empty() && slope(hull.back()) == slope(m)) continue;
            while (!hull.empty()) {
                const Member& top = hull.back();
                double cross = (base(top, right) - base(m, right)) / (slope(m) - slope(top));
                double start = now_;
                if (hull.size() >= 2) {
                    const Member& below = hull[hull.size() - 2];
                    start = std::max(now_, (base(below, right) - base(top, right)) / (slope(top) - slope(below)));
                }
                if (cross <= start)
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(m);
        }
        return hull;
    }

    // Appends B (shifted) to A and returns A's key.
    std::size_t join(Map::iterator A, Map::iterator B, double shift) {
        Comp& a = A->second;
        for (auto m : B->second.right) a.right.push_back({m.i, m.shift + shift});
        for (auto m : B->second.left) a.left.push_back({m.i, m.shift + shift});
        a.right = prune(std::move(a.right), true);
        a.left = prune(std::move(a.left), false);
        ++a.version;
        std::size_t key = A->first;
        comps_.erase(B);
        return key;
    }

    // Merges a fresh or grown component with neighbours it already touches.
    std::size_t absorb(std::size_t at) {
        for (;;) {
            auto it = comps_.find(at);
            auto [nx, shift] = successor(it);
            if (nx != comps_.end() && meet(it->second, nx->second, shift).s <= now_) {
                if (nx == it) {
                    covered_ = true;
                    return at;
                }
                at = join(it, nx, shift);
                continue;
            }
            Map::iterator pv = comps_.end();
            double pshift = 0.0;
            if (it != comps_.begin()) {
                pv = std::prev(it);
            } else if (circle_ && comps_.size() > 1) {
                pv = std::prev(comps_.end());
                pshift = kTwoPi;
            }
            if (pv != comps_.end() && meet(pv->second, it->second, pshift).s <= now_) {
                at = join(pv, it, pshift);
                continue;
            }
            return at;
        }
    }

    void schedule(Map::iterator it) {
        auto [nx, shift] = successor(it);
        if (nx == comps_.end()) return;
        Hit h = meet(it->second, nx->second, shift);
        if (std::isfinite(h.s)) events_.push({std::max(h.s, now_), 1, it->first, ++it->second.version});
    }

    void reschedule(std::size_t at) {
        auto it = comps_.find(at);
        schedule(it);
        if (it != comps_.begin())
            schedule(std::prev(it));
        else if (circle_ && comps_.size() > 1)
            schedule(std::prev(comps_.end()));
    }

    const EnvelopeMeasurer& em_;
    bool circle_;
    std::vector<double> a_;
    Map comps_;
    std::priority_queue<Event, std::vector<Event>, std::greater<>> events_;
    std::vector<double> levels_;
    double now_ = 0.0;
    bool covered_ = false;
};

std::vector<double> critical_levels(const EnvelopeMeasurer& em) {
    std::vector<double> cand = MergeSweep(em).run();
    for (std::size_t i = 0; i < em.size(); ++i) {
        double a = em.halfwidth(i) * em.height(i);
        if (em.domain() == Domain::Line) {
            for (double edge : {em.window()->lo, em.window()->hi}) {
                double t = 2.0 * a / (std::fabs(edge - em.center(i)) + em.halfwidth(i));
                if (t > 0.0 && t < em.height(i)) cand.push_back(t);
            }
        } else {
            double t = 2.0 * a / (kPi + em.halfwidth(i));
            if (t > 0.0 && t < em.height(i)) cand.push_back(t);
        }
    }
    return cand;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> t;
    if (!(lo > 0.0) || !(hi >= lo) || n < 1) return t;
    if (n == 1 || hi == lo) return {lo};
    for (int i = 0; i < n; ++i) t.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return t;
}

void finish_samples(WeakL1Report& rep) {
    std::size_t n = rep.samples.size();
    if (n == 0) return;
    std::size_t tail = std::max<std::size_t>(1, n / 4);
    double tmax = 0.0;
    for (std::size_t i = n - tail; i < n; ++i) tmax = std::max(tmax, rep.samples[i].second);
    rep.vanishing = tmax <= 0.1 * rep.sup;
}

}  // namespace

double measure_above(const BumpEnvelope& e, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("level must be positive");
    if (e.domain == Domain::Line && !e.window && !e.bumps.empty())
        throw std::invalid_argument("half-plane envelopes have unbounded support: declare an explicit window");
    return EnvelopeMeasurer(e).measure(t, false);
}

WeakL1Report weak_l1(const BoundaryStepFunction& f, const WeakL1Options& opt) {
    WeakL1Report rep;
    const auto& v = f.values();
    const auto& b = f.breaks();
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return v[a] > v[c]; });
    double scale = f.domain() == Domain::Circle ? 1.0 / kTwoPi : 1.0;
    double cum = 0.0;
    for (std::size_t r = 0; r < order.size(); ++r) {
        std::size_t i = order[r];
        cum += (b[i + 1] - b[i]);
        ++rep.candidates;
        if (r + 1 < order.size() && v[order[r + 1]] == v[i]) continue;
        double val = v[i] * cum * scale;
        if (v[i] > 0.0 && val > rep.sup) {
            rep.sup = val;
            rep.argmax_t = v[i];
        }
    }
    double lo = 0.0, hi = 0.0;
    for (double x : v) {
        if (x > 0.0 && (lo == 0.0 || x < lo)) lo = x;
        hi = std::max(hi, x);
    }
    for (double t : log_grid(opt.t_min.value_or(lo), opt.t_max.value_or(hi), opt.samples))
        rep.samples.push_back({t, t * f.measure_above(t)});
    finish_samples(rep);
    return rep;
}

WeakL1Report weak_l1(const BumpEnvelope& e, const WeakL1Options& opt) {
    if (e.domain == Domain::Line && !e.window && !e.bumps.empty())
        throw std::invalid_argument("half-plane envelopes have unbounded support: declare an explicit window");
    WeakL1Report rep;
    EnvelopeMeasurer em(e);
    const std::size_t n = em.size();
    if (n == 0) return rep;

    std::vector<double> cand = critical_levels(em);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    // Upper bound t·min(total, Σ_{φ ≥ t} 2R) from suffix sums over bumps sorted by height.
    std::vector<std::size_t> by_height(n);
    std::iota(by_height.begin(), by_height.end(), std::size_t{0});
    std::sort(by_height.begin(), by_height.end(), [&](std::size_t a, std::size_t b) { return em.height(a) < em.height(b); });
    std::vector<double> hs(n), s1(n + 1, 0.0), s2(n + 1, 0.0);
    for (std::size_t r = n; r-- > 0;) {
        std::size_t i = by_height[r];
        hs[r] = em.height(i);
        s1[r] = s1[r + 1] + 4.0 * em.halfwidth(i) * em.height(i);
        s2[r] = s2[r + 1] + 2.0 * em.halfwidth(i);
    }
    double scale = em.domain() == Domain::Circle ? 1.0 / kTwoPi : 1.0;
    double total = em.total();
    std::vector<std::pair<double, double>> bounded;
    for (double t : cand) {
        std::size_t r = static_cast<std::size_t>(std::lower_bound(hs.begin(), hs.end(), t) - hs.begin());
        double ub = std::min(t * total, (s1[r] - t * s2[r]) * scale);
        bounded.push_back({ub, t});
    }
    std::sort(bounded.begin(), bounded.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (const auto& [ub, t] : bounded) {
        if (ub < rep.sup) break;
        ++rep.candidates;
        double val = t * em.measure(t, true);
        if (val > rep.sup || (val == rep.sup && t < rep.argmax_t)) {
            rep.sup = val;
            rep.argmax_t = t;
        }
    }
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (lo == 0.0 || em.height(i) < lo) lo = em.height(i);
        hi = std::max(hi, em.height(i));
    }
    for (double t : log_grid(opt.t_min.value_or(lo), opt.t_max.value_or(hi), opt.samples))
        rep.samples.push_back({t, t * em.measure(t, false)});
    finish_samples(rep);
    return rep;
}

std::string to_string(EpsRule r) { return r == EpsRule::One ? "one" : "inverse-log"; }

CounterexampleFamily counterexample_family(double alpha, double beta, EpsRule rule, std::size_t K) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (beta < 2.0 * (alpha + 1.0) - 1e-12) throw std::invalid_argument("the family needs beta >= 2(alpha + 1)");
    if (K < 10) throw std::invalid_argument("the family needs K >= 10");
    CounterexampleFamily f;
    f.alpha = alpha;
    f.beta = beta;
    f.rule = rule;
    for (std::size_t k = 1; k <= K; ++k) {
        double kk = static_cast<double>(k);
        double eps = rule == EpsRule::One ? 1.0 : 1.0 / std::max(1.0, std::log(kk));
        f.x.push_back(std::pow(kk, -alpha));
        f.y.push_back(std::pow(kk, -beta));
        f.eps.push_back(eps);
        f.phi.push_back(eps * std::pow(kk, beta - 1.0));
    }
    if (rule == EpsRule::One) {
        f.intended = {"M_PHI_WEAK_L1", "PHI_SHARP_NOT_WEAK_L1"};
    } else {
        f.intended = {"PHI_SHARP_WEAK_L1", "NO_HARMONIC_MAJORANT"};
    }
    return f;
}

double distribution_analytic(const CounterexampleFamily& f, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("level must be positive");
    const std::size_t K = f.size();
    std::size_t k0 = K;
    for (std::size_t k = 0; k < K; ++k)
        if (t < f.phi[k]) {
            k0 = k;
            break;
        }
    if (k0 == K) return 0.0;
    auto r = [&](std::size_t k) { return f.y[k] * f.phi[k] / t; };
    std::size_t k1 = K - 1;
    for (std::size_t k = k0; k + 1 < K; ++k) {
        if (f.x[k] - r(k) <= f.x[k + 1] + r(k + 1)) {
            k1 = k;
            break;
        }
    }
    double s = 0.0;
    for (std::size_t k = k0; k <= k1; ++k) s += f.y[k] * f.phi[k];
    return std::pow(static_cast<double>(k1 + 1), -f.alpha) + 2.0 * s / t;
}

BumpEnvelope family_envelope(const CounterexampleFamily& f) { return phi_sharp_line(f.x, f.y, f.phi, f.window); }

BoundaryStepFunction family_maximal(const CounterexampleFamily& f) { return nontangential_max_line(f.x, f.y, f.phi); }

}  // namespace nevan
