#include "quot/enumerate.hpp"

#include <fstream>
#include <future>
#include <vector>

namespace quot {

namespace {

// Self-contained mod-q arithmetic on uint32 residues; q < 2^15 keeps every
// product inside uint32.
constexpr std::uint64_t kMaxOracleModulus = 1u << 15;

std::uint32_t inv_mod_u32(std::uint32_t a, std::uint32_t q) {
    std::int64_t t = 0, new_t = 1, r = q, new_r = a;
    while (new_r != 0) {
        const std::int64_t quo = r / new_r;
        t -= quo * new_t;
        std::swap(t, new_t);
        r -= quo * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += q;
    return static_cast<std::uint32_t>(t);
}

// One framed tuple over F_q, stored as the digit vector of the odometer:
// A_1..A_m row-major, then v_1..v_r.
struct TupleView {
    const std::uint32_t* digits;
    std::size_t m, n, r;

    std::uint32_t a(std::size_t i, std::size_t row, std::size_t col) const {
        return digits[i * n * n + row * n + col];
    }
    std::uint32_t v(std::size_t j, std::size_t k) const { return digits[m * n * n + j * n + k]; }
};

bool tuple_commutes(const TupleView& t, std::uint32_t q) {
    const std::size_t n = t.n;
    for (std::size_t i = 0; i < t.m; ++i) {
        for (std::size_t j = i + 1; j < t.m; ++j) {
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    std::uint64_t fwd = 0, bwd = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        fwd += t.a(i, a, k) * t.a(j, k, b);
                        bwd += t.a(j, a, k) * t.a(i, k, b);
                    }
                    if (fwd % q != bwd % q) return false;
                }
            }
        }
    }
    return true;
}

// Incremental row-echelon span tracker mod q.
class FqSpan {
public:
    FqSpan(std::size_t n, std::uint32_t q) : n_(n), q_(q) {}

    std::size_t dim() const { return rows_.size(); }

    bool insert(std::vector<std::uint32_t> v) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::uint32_t lead = v[pivots_[k]];
            if (lead == 0) continue;
            for (std::size_t c = 0; c < n_; ++c) {
                v[c] = (v[c] + (q_ - lead) * rows_[k][c]) % q_;
            }
        }
        std::size_t piv = 0;
        while (piv < n_ && v[piv] == 0) ++piv;
        if (piv == n_) return false;
        const std::uint32_t inv = inv_mod_u32(v[piv], q_);
        for (std::size_t c = 0; c < n_; ++c) v[c] = (v[c] * inv) % q_;
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

private:
    std::size_t n_;
    std::uint32_t q_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

bool tuple_stable(const TupleView& t, std::uint32_t q) {
    const std::size_t n = t.n;
    if (n == 0) return true;

    FqSpan span(n, q);
    std::vector<std::vector<std::uint32_t>> worklist;
    for (std::size_t j = 0; j < t.r; ++j) {
        std::vector<std::uint32_t> vj(n);
        for (std::size_t k = 0; k < n; ++k) vj[k] = t.v(j, k);
        if (span.insert(vj)) worklist.push_back(std::move(vj));
    }
    while (!worklist.empty() && span.dim() < n) {
        std::vector<std::uint32_t> x = std::move(worklist.back());
        worklist.pop_back();
        for (std::size_t i = 0; i < t.m; ++i) {
            std::vector<std::uint32_t> ax(n, 0);
            for (std::size_t row = 0; row < n; ++row) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc += t.a(i, row, k) * x[k];
                ax[row] = static_cast<std::uint32_t>(acc % q);
            }
            if (span.insert(ax)) worklist.push_back(std::move(ax));
        }
    }
    return span.dim() == n;
}

// q^exp capped at cap+1 to signal overflow without wrapping.
std::uint64_t pow_capped(std::uint64_t q, std::size_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (out > cap / q) return cap + 1;
        out *= q;
    }
    return out;
}

void digits_from_index(std::uint64_t index, std::uint32_t q, std::vector<std::uint32_t>& digits) {
    for (std::size_t t = digits.size(); t-- > 0;) {
        digits[t] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
}

// Advances the odometer by one step (last digit fastest).
void step_odometer(std::vector<std::uint32_t>& digits, std::uint32_t q) {
    for (std::size_t t = digits.size(); t-- > 0;) {
        if (++digits[t] < q) return;
        digits[t] = 0;
    }
}

std::uint64_t count_range(std::size_t m, std::size_t n, std::size_t r, std::uint32_t q,
                          std::uint64_t from, std::uint64_t to) {
    const std::size_t digit_count = m * n * n + r * n;
    std::vector<std::uint32_t> digits(digit_count, 0);
    digits_from_index(from, q, digits);
    const TupleView view{digits.data(), m, n, r};

    std::uint64_t hits = 0;
    for (std::uint64_t idx = from; idx < to; ++idx) {
        if (tuple_commutes(view, q) && tuple_stable(view, q)) ++hits;
        step_odometer(digits, q);
    }
    return hits;
}

struct Checkpoint {
    std::uint64_t next_index = 0;
    std::uint64_t count = 0;
};

std::string checkpoint_header(std::size_t m, std::size_t n, std::size_t r, std::uint64_t q) {
    return "quot-count " + std::to_string(m) + " " + std::to_string(n) + " " + std::to_string(r) + " " +
           std::to_string(q);
}

Checkpoint load_checkpoint(const std::string& path, const std::string& header) {
    std::ifstream in(path);
    if (!in) return {};
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw Error("count_quot_points: checkpoint '" + path + "' does not match the requested count");
    }
    Checkpoint cp;
    if (!(in >> cp.next_index >> cp.count)) {
        throw Error("count_quot_points: malformed checkpoint '" + path + "'");
    }
    return cp;
}

void save_checkpoint(const std::string& path, const std::string& header, const Checkpoint& cp) {
    std::ofstream out(path, std::ios::trunc);
    out << header << "\n" << cp.next_index << " " << cp.count << "\n";
}

std::uint32_t require_oracle_modulus(std::uint64_t q) {
    if (q >= kMaxOracleModulus) throw Error("enumerate: modulus too large for the oracle");
    bool prime = q >= 2;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            prime = false;
            break;
        }
    }
    if (!prime) throw NotPrime("enumerate: q = " + std::to_string(q) + " is not prime");
    return static_cast<std::uint32_t>(q);
}

} // namespace

std::uint64_t gl_group_order(std::size_t n, std::uint64_t q) {
    std::uint64_t qn = 1;
    for (std::size_t k = 0; k < n; ++k) qn *= q;
    std::uint64_t order = 1, qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

CountResult count_quot_points(std::size_t m, std::size_t n, std::size_t r, std::uint64_t q,
                              const EnumerateOptions& opts) {
    if (m < 1 || r < 1) throw Error("count_quot_points: need m >= 1 and r >= 1");
    const std::uint32_t qq = require_oracle_modulus(q);
    const std::size_t digit_count = m * n * n + r * n;
    const std::uint64_t total = pow_capped(q, digit_count, opts.budget);
    if (total > opts.budget) {
        throw BudgetExceeded("count_quot_points: q^" + std::to_string(digit_count) +
                             " tuples exceed the budget of " + std::to_string(opts.budget));
    }

    std::uint64_t hits = 0;
    if (!opts.checkpoint_path.empty()) {
        const std::string header = checkpoint_header(m, n, r, q);
        Checkpoint cp = load_checkpoint(opts.checkpoint_path, header);
        if (cp.next_index > total) throw Error("count_quot_points: checkpoint index out of range");
        while (cp.next_index < total) {
            const std::uint64_t upto = std::min(total, cp.next_index + opts.checkpoint_stride);
            cp.count += count_range(m, n, r, qq, cp.next_index, upto);
            cp.next_index = upto;
            save_checkpoint(opts.checkpoint_path, header, cp);
        }
        hits = cp.count;
    } else if (opts.threads <= 1 || total < 2) {
        hits = count_range(m, n, r, qq, 0, total);
    } else {
        const std::uint64_t shards = std::min<std::uint64_t>(opts.threads, total);
        std::vector<std::future<std::uint64_t>> futures;
        futures.reserve(shards);
        for (std::uint64_t s = 0; s < shards; ++s) {
            const std::uint64_t from = total / shards * s + std::min<std::uint64_t>(s, total % shards);
            const std::uint64_t to = total / shards * (s + 1) + std::min<std::uint64_t>(s + 1, total % shards);
            futures.push_back(std::async(std::launch::async,
                                         [=] { return count_range(m, n, r, qq, from, to); }));
        }
        for (auto& f : futures) hits += f.get();
    }

    CountResult result{m, n, r, q, hits, 0, gl_group_order(n, q)};
    if (hits % result.gauge_group_order != 0) {
        throw NonIntegralOrbitCount("count_quot_points: " + std::to_string(hits) +
                                    " stable commuting tuples not divisible by |GL_n| = " +
                                    std::to_string(result.gauge_group_order));
    }
    result.orbit_count = hits / result.gauge_group_order;
    return result;
}

std::uint64_t count_first_order_lifts(const FramedRep& rep, std::uint64_t budget) {
    if (!rep.field().is_prime_field()) {
        throw FieldMismatch("count_first_order_lifts: representation must live over a prime field");
    }
    const std::uint32_t q = require_oracle_modulus(rep.field().characteristic());
    const std::size_t m = rep.m(), n = rep.n(), r = rep.r();
    const std::size_t digit_count = m * n * n + r * n;

    // Base point digits, from the oracle's own view of the data.
    std::vector<std::uint32_t> base(digit_count, 0);
    {
        const RepLayout lay{m, n, r};
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t row = 0; row < n; ++row)
                for (std::size_t col = 0; col < n; ++col)
                    base[lay.a_index(i, row, col)] = static_cast<std::uint32_t>(rep.A(i)(row, col).residue());
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < n; ++k)
                base[lay.v_index(j, k)] = static_cast<std::uint32_t>(rep.v(j)[k].residue());
    }
    const TupleView base_view{base.data(), m, n, r};
    if (!tuple_stable(base_view, q)) throw NotStable("count_first_order_lifts: base point is not stable");
    if (!tuple_commutes(base_view, q))
        throw NotCommuting("count_first_order_lifts: base point is not commuting");

    const std::uint64_t total = pow_capped(q, digit_count, budget);
    if (total > budget) {
        throw BudgetExceeded("count_first_order_lifts: q^" + std::to_string(digit_count) +
                             " deformations exceed the budget of " + std::to_string(budget));
    }

    // The eps-part of [A_i + eps a_i, A_j + eps a_j] over F_q[eps]/(eps^2);
    // the eps^0 part is zero because the base point commutes.
    std::vector<std::uint32_t> eps(digit_count, 0);
    const TupleView eps_view{eps.data(), m, n, r};
    auto lift_satisfies_relations = [&] {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                for (std::size_t a = 0; a < n; ++a) {
                    for (std::size_t b = 0; b < n; ++b) {
                        std::uint64_t plus = 0, minus = 0;
                        for (std::size_t k = 0; k < n; ++k) {
                            plus += base_view.a(i, a, k) * eps_view.a(j, k, b);
                            plus += eps_view.a(i, a, k) * base_view.a(j, k, b);
                            minus += base_view.a(j, a, k) * eps_view.a(i, k, b);
                            minus += eps_view.a(j, a, k) * base_view.a(i, k, b);
                        }
                        if (plus % q != minus % q) return false;
                    }
                }
            }
        }
        return true;
    };

    std::uint64_t lifts = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (lift_satisfies_relations()) ++lifts;
        step_odometer(eps, q);
    }

    std::uint64_t gauge_lifts = 1;
    for (std::size_t k = 0; k < n * n; ++k) gauge_lifts *= q;
    if (lifts % gauge_lifts != 0) {
        throw NonIntegralOrbitCount("count_first_order_lifts: " + std::to_string(lifts) +
                                    " lifts not divisible by q^(n^2) = " + std::to_string(gauge_lifts));
    }
    return lifts / gauge_lifts;
}

RationalPoly n1_orbit_polynomial(std::size_t m, std::size_t r) {
    std::vector<Rational> coeffs(m + r, Rational(0));
    for (std::size_t d = m; d < m + r; ++d) coeffs[d] = 1;
    return RationalPoly(std::move(coeffs));
}

} // namespace quot
