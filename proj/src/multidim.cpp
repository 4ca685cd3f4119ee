#include "eudoxus/multidim.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace eudoxus {

namespace {
constexpr std::size_t kMemoCap = std::size_t(1) << 16;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic noise hash over (seed, coordinate index, vector): FNV-1a on
// the decimal renderings, finished through splitmix64.
std::uint64_t vec_hash(unsigned long seed, int i, const Vec& v) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= '#';
        h *= 1099511628211ull;
    };
    mix(std::to_string(seed));
    mix(std::to_string(i));
    for (const BigInt& z : v) mix(z.get_str());
    return splitmix64(h);
}
}  // namespace

struct MultiHom::Node {
    int dim_in = 0;
    int dim_out = 0;
    std::function<Vec(const Vec&)> fn;
    BigInt cert;
    std::string label;

    mutable std::mutex memo_mutex;
    mutable std::map<Vec, Vec> memo;
};

MultiHom::MultiHom(int dim_in, int dim_out, std::function<Vec(const Vec&)> fn,
                   BigInt cert, std::string label) {
    if (dim_in < 1 || dim_out < 1)
        throw DomainError("dimensions must be >= 1");
    if (cert < 0) throw DomainError("certificate must be nonnegative");
    auto node = std::make_shared<Node>();
    node->dim_in = dim_in;
    node->dim_out = dim_out;
    node->fn = std::move(fn);
    node->cert = std::move(cert);
    node->label = std::move(label);
    node_ = std::move(node);
}

int MultiHom::dim_in() const { return node_->dim_in; }
int MultiHom::dim_out() const { return node_->dim_out; }
const BigInt& MultiHom::cert() const { return node_->cert; }
const std::string& MultiHom::label() const { return node_->label; }

Vec MultiHom::eval(const Vec& v) const {
    if (static_cast<int>(v.size()) != node_->dim_in)
        throw DomainError("eval: argument dimension mismatch");
    {
        std::lock_guard<std::mutex> lock(node_->memo_mutex);
        auto it = node_->memo.find(v);
        if (it != node_->memo.end()) return it->second;
    }
    Vec r = node_->fn(v);
    if (static_cast<int>(r.size()) != node_->dim_out)
        throw DomainError("eval: result dimension mismatch");
    {
        std::lock_guard<std::mutex> lock(node_->memo_mutex);
        if (node_->memo.size() < kMemoCap) node_->memo.emplace(v, r);
    }
    return r;
}

Vec MultiHom::defect(const Vec& u, const Vec& v) const {
    if (u.size() != v.size() ||
        static_cast<int>(u.size()) != node_->dim_in)
        throw DomainError("defect: dimension mismatch");
    Vec s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = u[i] + v[i];
    Vec a = eval(s), b = eval(u), c = eval(v);
    Vec d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i] - c[i];
    return d;
}

Real coordinate_section(const MultiHom& f, int j, int i) {
    if (j < 0 || j >= f.dim_in() || i < 0 || i >= f.dim_out())
        throw DomainError("coordinate_section: index out of range");
    const int n = f.dim_in();
    auto fn = [f, j, i, n](const BigInt& p) -> BigInt {
        Vec v(n, BigInt(0));
        v[static_cast<std::size_t>(j)] = p;
        return f.eval(v)[static_cast<std::size_t>(i)];
    };
    std::ostringstream label;
    label << f.label() << "[" << i << "," << j << "]";
    return make_raw(std::move(fn), f.cert(), label.str());
}

bool IntervalMatrix::all_converged() const {
    for (const auto& row : converged)
        for (bool c : row)
            if (!c) return false;
    return true;
}

IntervalMatrix recover_matrix(const MultiHom& f, const Rat& eps,
                              const Budget& b) {
    if (eps <= 0) throw DomainError("recover_matrix: eps must be positive");
    IntervalMatrix out;
    out.rows = f.dim_out();
    out.cols = f.dim_in();
    out.entries.assign(out.rows, std::vector<Interval>(out.cols));
    out.converged.assign(out.rows, std::vector<bool>(out.cols, true));
    for (int i = 0; i < out.rows; ++i) {
        for (int j = 0; j < out.cols; ++j) {
            Real section = coordinate_section(f, j, i);
            try {
                out.entries[i][j] = refine(section, eps, b);
            } catch (const BudgetExceeded& e) {
                out.converged[i][j] = false;
                if (e.best) out.entries[i][j] = *e.best;
            }
        }
    }
    return out;
}

MultiHom from_matrix_noisy(const RatMatrix& m, const BigInt& k,
                           unsigned long seed) {
    if (m.empty() || m.front().empty())
        throw DomainError("from_matrix_noisy: empty matrix");
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m.front().size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw DomainError("from_matrix_noisy: ragged matrix");
    if (k < 0) throw DomainError("from_matrix_noisy: negative noise bound");

    const BigInt span = 2 * k + 1;
    auto fn = [m, k, span, seed, rows, cols](const Vec& v) {
        Vec out(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            Rat s(0);
            for (int j = 0; j < cols; ++j)
                s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     Rat(v[static_cast<std::size_t>(j)]);
            BigInt r = round_half_even(s);
            if (k > 0) {
                BigInt h(std::to_string(vec_hash(seed, i, v)));
                r += h % span - k;
            }
            out[static_cast<std::size_t>(i)] = std::move(r);
        }
        return out;
    };
    std::ostringstream label;
    label << "noisy" << rows << "x" << cols << "(k=" << k.get_str()
          << ",seed=" << seed << ")";
    // Each coordinate sits within 1/2 + k of the linear value, so a defect
    // coordinate is bounded by 3*(1/2 + k) <= 3*(1 + 2k).
    return MultiHom(cols, rows, std::move(fn), 3 * (1 + 2 * k), label.str());
}

MultiHom compose_linear(const std::vector<std::vector<BigInt>>& l,
                        const MultiHom& f) {
    if (l.empty() || l.front().empty())
        throw DomainError("compose_linear: empty matrix");
    const int rows = static_cast<int>(l.size());
    const int mid = static_cast<int>(l.front().size());
    if (mid != f.dim_out())
        throw DomainError("compose_linear: inner dimension mismatch");
    for (const auto& row : l)
        if (static_cast<int>(row.size()) != mid)
            throw DomainError("compose_linear: ragged matrix");

    BigInt row_norm = 0;
    for (const auto& row : l) {
        BigInt s = 0;
        for (const BigInt& e : row) s += abs(e);
        if (s > row_norm) row_norm = s;
    }
    auto fn = [l, f, rows, mid](const Vec& v) {
        Vec inner = f.eval(v);
        Vec out(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            BigInt s = 0;
            for (int j = 0; j < mid; ++j)
                s += l[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     inner[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = std::move(s);
        }
        return out;
    };
    return MultiHom(f.dim_in(), rows, std::move(fn), row_norm * f.cert(),
                    "linear*" + f.label());
}

MultiHom add(const MultiHom& f, const MultiHom& g) {
    if (f.dim_in() != g.dim_in() || f.dim_out() != g.dim_out())
        throw DomainError("add: dimension mismatch");
    auto fn = [f, g](const Vec& v) {
        Vec a = f.eval(v), b = g.eval(v);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };
    return MultiHom(f.dim_in(), f.dim_out(), std::move(fn),
                    f.cert() + g.cert(),
                    "(" + f.label() + "+" + g.label() + ")");
}

SplitResult split_direct_sum(const MultiHom& f, int n1) {
    const int n = f.dim_in();
    if (n1 < 1 || n1 >= n) throw DomainError("split_direct_sum: bad split");
    const int n2 = n - n1;

    auto embed = [n](const Vec& part, int offset) {
        Vec v(static_cast<std::size_t>(n), BigInt(0));
        for (std::size_t i = 0; i < part.size(); ++i)
            v[static_cast<std::size_t>(offset) + i] = part[i];
        return v;
    };
    MultiHom left(n1, f.dim_out(),
                  [f, embed](const Vec& x) { return f.eval(embed(x, 0)); },
                  f.cert(), f.label() + "|left");
    MultiHom right(
        n2, f.dim_out(),
        [f, embed, n1](const Vec& y) { return f.eval(embed(y, n1)); },
        f.cert(), f.label() + "|right");

    // |f(x,y) - f(x,0) - f(0,y)| = |d_f((x,0), (0,y))|, sampled on a seeded
    // set of coordinate vectors; never exceeds f.cert.
    BigInt max_defect = 0;
    std::uint64_t state = 0x5eed;
    auto next_coord = [&state]() {
        state = splitmix64(state);
        return BigInt(static_cast<long>(state % 101) - 50);
    };
    for (int trial = 0; trial < 200; ++trial) {
        Vec x(static_cast<std::size_t>(n1)), y(static_cast<std::size_t>(n2));
        for (auto& c : x) c = next_coord();
        for (auto& c : y) c = next_coord();
        Vec full(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < x.size(); ++i) full[i] = x[i];
        for (std::size_t i = 0; i < y.size(); ++i)
            full[static_cast<std::size_t>(n1) + i] = y[i];
        Vec a = f.eval(full), b = left.eval(x), c = right.eval(y);
        for (std::size_t i = 0; i < a.size(); ++i) {
            BigInt d = abs(a[i] - b[i] - c[i]);
            if (d > max_defect) max_defect = d;
        }
    }
    return {std::move(left), std::move(right), std::move(max_defect)};
}

RatMatrix read_matrix_grid(std::istream& in) {
    std::size_t tokens = 0;
    auto next = [&in, &tokens]() {
        std::string tok;
        if (!(in >> tok))
            throw ParseError(tokens, "matrix grid: unexpected end of input");
        ++tokens;
        return tok;
    };
    auto to_int = [](const std::string& tok, const char* what) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(0, std::string("matrix grid: bad ") + what +
                                    " '" + tok + "'");
        }
    };
    const int rows = to_int(next(), "row count");
    const int cols = to_int(next(), "column count");
    RatMatrix m(static_cast<std::size_t>(rows),
                std::vector<Rat>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            std::string tok = next();
            Rat q;
            if (q.set_str(tok, 10) != 0)
                throw ParseError(tokens - 1,
                                 "matrix grid: malformed rational '" + tok +
                                     "'");
            if (q.get_den() == 0)
                throw ParseError(tokens - 1,
                                 "matrix grid: zero denominator in '" + tok +
                                     "'");
            q.canonicalize();
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q;
        }
    }
    return m;
}

void write_matrix_grid(std::ostream& out, const RatMatrix& m) {
    out << m.size() << " " << (m.empty() ? 0 : m.front().size()) << "\n";
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << rat_str(row[j]);
        out << "\n";
    }
}

void write_interval_matrix(std::ostream& out, const IntervalMatrix& m) {
    out << m.rows << " " << m.cols << "\n";
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j)
            out << (j ? " " : "")
                << m.entries[static_cast<std::size_t>(i)]
                            [static_cast<std::size_t>(j)]
                       .str();
        out << "\n";
    }
}

}  // namespace eudoxus
