#include "seaweed/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "seaweed/error.hpp"
#include "seaweed/meander.hpp"

namespace seaweed {

namespace {

using SparseRow = std::vector<std::pair<int, Integer>>;

// Row echelon form over the integers, built one row at a time. Rows are kept
// primitive (content 1, positive leading entry), so entries stay small.
class Echelon {
public:
    explicit Echelon(int cols) : pivot_of_(cols, -1) {}

    bool insert(SparseRow row) {
        normalize(row);
        while (!row.empty()) {
            const int lead = row.front().first;
            const int p = pivot_of_[lead];
            if (p < 0) {
                pivot_of_[lead] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(row));
                return true;
            }
            row = combine(rows_[p], row);
            normalize(row);
        }
        return false;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    int pivot_row(int col) const { return pivot_of_[col]; }

private:
    // Eliminates the shared leading column: (p/g) * row - (a/g) * pivot.
    static SparseRow combine(const SparseRow& pivot, const SparseRow& row) {
        const Integer& p = pivot.front().second;
        const Integer& a = row.front().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
        const Integer mr = p / g, mp = a / g;
        SparseRow out;
        out.reserve(pivot.size() + row.size());
        std::size_t i = 1, j = 1;
        Integer v;
        while (i < pivot.size() || j < row.size()) {
            if (j >= row.size() || (i < pivot.size() && pivot[i].first < row[j].first)) {
                v = -mp * pivot[i].second;
                out.emplace_back(pivot[i].first, v);
                ++i;
            } else if (i >= pivot.size() || row[j].first < pivot[i].first) {
                v = mr * row[j].second;
                out.emplace_back(row[j].first, v);
                ++j;
            } else {
                v = mr * row[j].second - mp * pivot[i].second;
                if (v != 0) out.emplace_back(row[j].first, v);
                ++i, ++j;
            }
        }
        return out;
    }

    static void normalize(SparseRow& row) {
        if (row.empty()) return;
        Integer g = 0;
        for (const auto& [c, v] : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        if (row.front().second < 0) g = -g;
        if (g != 1) {
            for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }

    std::vector<SparseRow> rows_;
    std::vector<int> pivot_of_;
};

// Dense N x N lookup of F scaled to integer coefficients.
std::vector<Integer> integer_functional(const Functional& f, int N) {
    Integer lcm = 1;
    for (const auto& [p, c] : f.entries) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out(static_cast<std::size_t>(N) * N, 0);
    for (const auto& [p, c] : f.entries) {
        if (p.i < 1 || p.j < 1 || p.i > N || p.j > N) throw Error(ErrorCode::Validation, "functional entry outside the matrix");
        out[(p.i - 1) * N + (p.j - 1)] = c.get_num() * (lcm / c.get_den());
    }
    return out;
}

void check_functional(const SeaweedSpec& spec, const Functional& f) {
    const AdmissibleSet adm = admissible_positions(spec);
    for (const auto& [p, c] : f.entries) {
        if (!adm.contains(p)) {
            throw Error(ErrorCode::Validation, "functional entry (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                                   ") is not admissible");
        }
    }
}

// F([X, Y]) for basis elements, with F given as a dense integer lookup.
Integer bracket_value(const BasisElement& X, const BasisElement& Y, const std::vector<Integer>& F, int N) {
    Integer sum = 0;
    for (const auto& tx : X.terms) {
        for (const auto& ty : Y.terms) {
            const int xy = tx.coef * ty.coef;
            if (tx.pos.j == ty.pos.i) {
                const Integer& v = F[(tx.pos.i - 1) * N + (ty.pos.j - 1)];
                if (v != 0) sum += xy * v;
            }
            if (ty.pos.j == tx.pos.i) {
                const Integer& v = F[(ty.pos.i - 1) * N + (tx.pos.j - 1)];
                if (v != 0) sum -= xy * v;
            }
        }
    }
    return sum;
}

// Rows of the integer kernel system: row x, column l holds F([x_l, x]).
std::vector<SparseRow> integer_system(const std::vector<BasisElement>& basis, const Functional& f, int N) {
    const auto F = integer_functional(f, N);
    const int d = static_cast<int>(basis.size());
    std::vector<SparseRow> rows(d);
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            Integer v = bracket_value(basis[l], basis[k], F, N);
            if (v != 0) rows[k].emplace_back(l, std::move(v));
        }
    }
    return rows;
}

Echelon reduce(const std::vector<SparseRow>& rows, int cols) {
    Echelon ech(cols);
    for (const auto& r : rows) ech.insert(r);
    return ech;
}

std::string var_name(int v) { return "b" + std::to_string(v); }

}  // namespace

void LinearForm::add(int var, const Rational& coef) {
    if (coef == 0) return;
    auto it = terms.find(var);
    if (it == terms.end()) {
        terms.emplace(var, coef);
        return;
    }
    it->second += coef;
    if (it->second == 0) terms.erase(it);
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
    LinearForm out = *this;
    for (const auto& [v, c] : o.terms) out.add(v, c);
    return out;
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
    LinearForm out = *this;
    for (const auto& [v, c] : o.terms) out.add(v, -c);
    return out;
}

LinearForm LinearForm::operator-() const {
    LinearForm out;
    for (const auto& [v, c] : terms) out.terms.emplace(v, -c);
    return out;
}

std::string LinearForm::str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [v, c] : terms) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (a != 1) out += to_string(a) + "*";
        out += var_name(v);
        first = false;
    }
    return out;
}

KernelSystem assemble_system(const SeaweedSpec& spec, const Functional& f) {
    check_functional(spec, f);
    KernelSystem sys;
    sys.basis = basis(spec);
    const int N = spec.size();
    // Exact rational entries: evaluate with the unscaled coefficients.
    std::vector<Rational> F(static_cast<std::size_t>(N) * N, 0);
    for (const auto& [p, c] : f.entries) F[(p.i - 1) * N + (p.j - 1)] = c;
    const int d = static_cast<int>(sys.basis.size());
    sys.rows.assign(d, std::vector<Rational>(d, 0));
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            Rational sum = 0;
            for (const auto& tx : sys.basis[l].terms) {
                for (const auto& ty : sys.basis[k].terms) {
                    const int xy = tx.coef * ty.coef;
                    if (tx.pos.j == ty.pos.i) sum += xy * F[(tx.pos.i - 1) * N + (ty.pos.j - 1)];
                    if (ty.pos.j == tx.pos.i) sum -= xy * F[(ty.pos.i - 1) * N + (tx.pos.j - 1)];
                }
            }
            sys.rows[k][l] = sum;
        }
    }
    return sys;
}

int kernel_dim(const SeaweedSpec& spec, const Functional& f) {
    check_functional(spec, f);
    const auto b = basis(spec);
    const int d = static_cast<int>(b.size());
    return d - reduce(integer_system(b, f, spec.size()), d).rank();
}

RelationsMatrix relations_matrix(const SeaweedSpec& spec, const Functional& f) {
    check_functional(spec, f);
    const auto b = basis(spec);
    const int d = static_cast<int>(b.size());
    const int N = spec.size();
    Echelon ech = reduce(integer_system(b, f, N), d);

    RelationsMatrix rel;
    rel.n = N;
    rel.cells.assign(N, std::vector<LinearForm>(N));
    std::vector<int> free_cols;
    for (int c = 0; c < d; ++c) {
        if (ech.pivot_row(c) < 0) free_cols.push_back(c);
    }
    rel.dim = static_cast<int>(free_cols.size());
    // Pivot rows sorted by decreasing pivot column for back substitution.
    std::vector<int> order(ech.rank());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int c) { return ech.rows()[a].front().first > ech.rows()[c].front().first; });
    for (int v = 0; v < rel.dim; ++v) {
        const int fc = free_cols[v];
        rel.free_vars.push_back(b[fc].pos);
        std::vector<Rational> x(d, 0);
        x[fc] = 1;
        for (int r : order) {
            const auto& row = ech.rows()[r];
            const int pc = row.front().first;
            if (pc > fc) continue;  // entries right of the free column are all zero here
            Rational s = 0;
            for (std::size_t k = 1; k < row.size(); ++k) {
                const Rational& xv = x[row[k].first];
                if (xv != 0) s += Rational(row[k].second) * xv;
            }
            x[pc] = -s / Rational(row.front().second);
        }
        for (int l = 0; l < d; ++l) {
            if (x[l] == 0) continue;
            for (const auto& t : b[l].terms) rel.cells[t.pos.i - 1][t.pos.j - 1].add(v + 1, x[l] * t.coef);
        }
    }
    return rel;
}

bool verify_relations(const SeaweedSpec& spec, const Functional& f, const RelationsMatrix& rel) {
    const int N = spec.size();
    if (rel.n != N) return false;
    const AdmissibleSet adm = admissible_positions(spec);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            if (!adm.contains(i, j) && !rel.cell(i, j).is_zero()) return false;
        }
    }
    // F([B, x]) = sum over F-entries (p,q) of c_pq * [B, x]_pq.
    for (const auto& x : basis(spec)) {
        LinearForm total_form;
        for (const auto& t : x.terms) {
            const int a = t.pos.i, bcol = t.pos.j;
            for (const auto& [p, c] : f.entries) {
                // (B e_ab)_pq = B_pa when q == b; (e_ab B)_pq = B_bq when p == a.
                if (p.j == bcol) {
                    for (const auto& [v, k] : rel.cell(p.i, a).terms) total_form.add(v, c * k * t.coef);
                }
                if (p.i == a) {
                    for (const auto& [v, k] : rel.cell(bcol, p.j).terms) total_form.add(v, -c * k * t.coef);
                }
            }
        }
        if (!total_form.is_zero()) return false;
    }
    // The free-variable matrices must also sit inside the algebra: each one
    // must be a combination of basis elements, checked through the mirror
    // and trace relations of the family.
    if (spec.family == Family::A) {
        LinearForm trace;
        for (int i = 1; i <= N; ++i) trace = trace + rel.cell(i, i);
        if (!trace.is_zero()) return false;
    }
    if (spec.family == Family::B || spec.family == Family::C) {
        for (int i = 1; i <= N; ++i) {
            for (int j = 1; j <= N; ++j) {
                Position m = mirror({i, j}, N);
                int sign = -1;
                if (spec.family == Family::C) sign = ((i <= spec.n) == (j <= spec.n)) ? -1 : 1;
                LinearForm expect = rel.cell(i, j);
                if (sign < 0) expect = -expect;
                if (rel.cell(m.i, m.j) != expect) return false;
            }
        }
    }
    return true;
}

RegularityReport is_regular(const SeaweedSpec& spec, const Functional& f) {
    RegularityReport r;
    r.kernel_dim = kernel_dim(spec, f);
    r.index = index(spec);
    r.regular = r.kernel_dim == r.index;
    return r;
}

Functional random_functional(const SeaweedSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pool(1, 97);
    Functional f;
    f.domain = spec;
    std::set<Position> touched;
    for (const auto& x : basis(spec)) {
        for (const auto& t : x.terms) touched.insert(t.pos);
    }
    for (auto p : touched) f.entries[p] = pool(rng);
    return f;
}

int generic_index_oracle(const SeaweedSpec& spec, int samples, std::uint64_t seed) {
    if (samples < 1) throw Error(ErrorCode::Validation, "oracle needs at least one sample");
    int best = -1;
    std::mt19937_64 seeds(seed);
    for (int s = 0; s < samples; ++s) {
        const int k = kernel_dim(spec, random_functional(spec, seeds()));
        best = best < 0 ? k : std::min(best, k);
    }
    return best;
}

namespace {

using FormBlock = std::vector<std::vector<LinearForm>>;

FormBlock extract(const RelationsMatrix& rel, Range r) {
    const int c = r.second - r.first + 1;
    FormBlock out(c, std::vector<LinearForm>(c));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) out[i][j] = rel.cell(r.first + i, r.first + j);
    return out;
}

FormBlock rotated(const FormBlock& b) {
    const int c = static_cast<int>(b.size());
    FormBlock out = b;
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) out[i][j] = b[c - 1 - i][c - 1 - j];
    return out;
}

FormBlock neg_anti_transposed(const FormBlock& b) {
    const int c = static_cast<int>(b.size());
    FormBlock out = b;
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) out[i][j] = -b[c - 1 - j][c - 1 - i];
    return out;
}

bool is_zero_block(const FormBlock& b) {
    for (const auto& row : b)
        for (const auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

}  // namespace

BlockReport block_structure_check(const SeaweedSpec& spec, const RelationsMatrix& rel, const CoreData& core) {
    BlockReport report;
    const int N = spec.size();
    const auto& cm = core.cm;
    std::vector<int> vertex_of(N + 1, 0);
    for (int x = 1; x <= cm.v; ++x)
        for (int y = cm.runs[x].first; y <= cm.runs[x].second; ++y) vertex_of[y] = x;
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            if (!rel.cell(i, j).is_zero() && vertex_of[i] != vertex_of[j]) {
                report.problems.push_back("nonzero cell (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") outside the core");
            }
        }
    }
    const bool bc = spec.family == Family::B || spec.family == Family::C;
    std::vector<std::string> label(cm.v + 1);
    for (const auto& comp : core.components) {
        const FormBlock anchor = extract(rel, cm.runs[comp.anchor]);
        const FormBlock anchor_r = rotated(anchor);
        const FormBlock anchor_m = neg_anti_transposed(anchor);
        const FormBlock anchor_mr = neg_anti_transposed(anchor_r);
        for (int x : comp.path) {
            const FormBlock blk = extract(rel, cm.runs[x]);
            const std::string base = "B_" + std::to_string(comp.size);
            if (is_zero_block(blk)) {
                label[x] = "(0)";
                if (!is_zero_block(anchor)) report.problems.push_back("zero block in a nonzero component");
            } else if (blk == anchor) {
                label[x] = base;
            } else if (blk == anchor_r) {
                label[x] = base + "^R";
            } else if (bc && blk == anchor_m) {
                label[x] = "-" + base + "^t\xCC\x82";
            } else if (bc && blk == anchor_mr) {
                label[x] = "-" + base + "^t";
            } else {
                label[x] = "?";
                report.problems.push_back("block at run " + std::to_string(cm.runs[x].first) + ".." +
                                          std::to_string(cm.runs[x].second) + " is not a copy of its component's block");
            }
        }
    }
    for (int x = 1; x <= cm.v; ++x) {
        if (x > 1) report.blocks += "\xE2\x8A\x95";
        report.blocks += label[x];
    }
    report.ok = report.problems.empty();
    return report;
}

ClosedFormReport fn_closed_form_check(int n) {
    ClosedFormReport report;
    if (n < 1) throw Error(ErrorCode::Validation, "n must be positive");
    const SeaweedSpec spec = make_spec(Family::GL, {n}, {n}, n);
    const RelationsMatrix rel = relations_matrix(spec, base_functional(BaseKind::F, n));
    auto fail = [&](const std::string& what) { report.failures.push_back(what); };
    auto pos = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    if (rel.dim != n) fail("kernel dimension " + std::to_string(rel.dim));
    for (auto p : rel.free_vars) {
        if (p.i != n && p.j != n) fail("free variable at " + pos(p.i, p.j) + " is off the last row and column");
    }
    auto b = [&](int s) -> const LinearForm& { return rel.cell(n, s); };
    for (int s = 1; s <= n; ++s) {
        if (rel.cell(n, s) != rel.cell(s, n)) fail("last row and column differ at s=" + std::to_string(s));
    }
    for (int i = 1; i <= n; ++i) {
        LinearForm sum;
        for (int s = 1; s <= n + 1 - i; ++s) sum = sum + b(s);
        if (rel.cell(1, i) != sum) fail("first-row formula fails at " + pos(1, i));
    }
    // Index domain of the halved region used by both recurrences.
    const int half_up = (n + 1) / 2;
    auto in_domain = [&](int i, int j) {
        if (i >= 1 && i <= half_up) return j >= i && j <= n + 1 - i;
        return i > half_up && i <= n && j > n + 1 - i && j <= i;
    };
    const int diag_max = n % 2 ? n / 2 : n / 2 + 1;
    const int col_max = n % 2 ? n / 2 + 1 : n / 2;
    auto ok = [&](int x) { return x >= 1 && x <= n; };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (!in_domain(i, j)) continue;
            if (i <= diag_max && ok(i - 1) && ok(j - 1) && ok(n + 3 - i - j)) {
                if (rel.cell(i, j) != rel.cell(i - 1, j - 1) - b(n + 3 - i - j)) fail("diagonal recurrence fails at " + pos(i, j));
            }
            if (i <= col_max && ok(n + 1 - i) && ok(n + 2 - i) && ok(j + 1) && ok(j - i + 1)) {
                if (rel.cell(n + 1 - i, j) != rel.cell(n + 2 - i, j + 1) + b(j - i + 1)) {
                    fail("column recurrence fails at " + pos(i, j));
                }
            }
        }
    }
    report.ok = report.failures.empty();
    return report;
}

std::vector<std::vector<Rational>> kernel_subspace(const RelationsMatrix& rel) {
    const int N = rel.n;
    std::vector<std::vector<Rational>> vecs(rel.dim, std::vector<Rational>(static_cast<std::size_t>(N) * N, 0));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            for (const auto& [v, c] : rel.cells[i][j].terms) {
                if (v >= 1 && v <= rel.dim) vecs[v - 1][i * N + j] = c;
            }
        }
    }
    // Reduced row echelon form.
    std::size_t r = 0;
    const std::size_t cols = static_cast<std::size_t>(N) * N;
    for (std::size_t c = 0; c < cols && r < vecs.size(); ++c) {
        std::size_t p = r;
        while (p < vecs.size() && vecs[p][c] == 0) ++p;
        if (p == vecs.size()) continue;
        std::swap(vecs[r], vecs[p]);
        const Rational inv = 1 / vecs[r][c];
        for (auto& x : vecs[r]) x *= inv;
        for (std::size_t q = 0; q < vecs.size(); ++q) {
            if (q == r || vecs[q][c] == 0) continue;
            const Rational m = vecs[q][c];
            for (std::size_t k = c; k < cols; ++k) vecs[q][k] -= m * vecs[r][k];
        }
        ++r;
    }
    vecs.resize(r);
    return vecs;
}

bool same_kernel(const RelationsMatrix& a, const RelationsMatrix& b) {
    return a.n == b.n && kernel_subspace(a) == kernel_subspace(b);
}

std::string format_relations(const RelationsMatrix& rel) {
    std::vector<std::vector<std::string>> text(rel.n, std::vector<std::string>(rel.n));
    std::size_t width = 1;
    for (int i = 0; i < rel.n; ++i)
        for (int j = 0; j < rel.n; ++j) width = std::max(width, (text[i][j] = rel.cells[i][j].str()).size());
    std::ostringstream os;
    for (int i = 0; i < rel.n; ++i) {
        for (int j = 0; j < rel.n; ++j) {
            if (j) os << "  ";
            os << std::string(width - text[i][j].size(), ' ') << text[i][j];
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace seaweed
