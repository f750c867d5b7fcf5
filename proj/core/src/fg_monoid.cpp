#include <posmon/fg_monoid.hpp>

#include <posmon/error.hpp>

#include <algorithm>
#include <functional>

namespace posmon {

namespace {

struct ValueBounds {
    Rational lo;
    Rational hi;
};

ValueBounds value_bounds(const std::vector<AlgebraicReal>& constants, const Coordinates& coords) {
    ValueBounds b{Rational(0), Rational(0)};
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Rational& c = coords[i];
        if (c.is_zero()) continue;
        if (c.is_positive()) {
            b.lo += c * constants[i].lo();
            b.hi += c * constants[i].hi();
        } else {
            b.lo += c * constants[i].hi();
            b.hi += c * constants[i].lo();
        }
    }
    return b;
}

bool is_zero_vector(const Coordinates& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

void check_dimension(const FgMonoid& m, const Coordinates& x) {
    if (x.size() != m.basis.dimension())
        fail(ErrorCode::DimensionMismatch,
             "coordinate vector has dimension " + std::to_string(x.size()) + ", basis has " +
                 std::to_string(m.basis.dimension()));
}

// Depth-first enumeration of nonnegative multiplicity vectors m with
// sum m_i * atom_i = x in coordinates. Multiplicity bounds come from the
// rational value enclosures, which makes the enumeration provably exhaustive.
class FgSearch {
public:
    FgSearch(const FgMonoid& monoid, const std::vector<Coordinates>& atoms, bool collect_all)
        : monoid_(monoid), atoms_(atoms), collect_all_(collect_all) {
        atom_lo_.reserve(atoms_.size());
        for (const auto& a : atoms_) atom_lo_.push_back(value_bounds(monoid_.basis.constants, a).lo);
    }

    std::vector<std::vector<Int>> run(const Coordinates& x) {
        current_.assign(atoms_.size(), Int(0));
        solutions_.clear();
        dfs(0, x);
        std::sort(solutions_.begin(), solutions_.end());
        return solutions_;
    }

private:
    bool dfs(std::size_t i, const Coordinates& residual) {
        if (is_zero_vector(residual)) {
            for (std::size_t j = i; j < atoms_.size(); ++j) current_[j] = 0;
            solutions_.push_back(current_);
            return !collect_all_;
        }
        if (i == atoms_.size()) return false;
        ValueBounds rb = value_bounds(monoid_.basis.constants, residual);
        if (rb.hi < Rational(0)) return false;
        if (i + 1 == atoms_.size()) {
            // Last atom: the multiplicity is forced coordinate-wise.
            const Coordinates& a = atoms_[i];
            Rational mult;
            bool have = false;
            for (std::size_t t = 0; t < a.size(); ++t) {
                if (a[t].is_zero()) {
                    if (!residual[t].is_zero()) return false;
                    continue;
                }
                Rational m = residual[t] / a[t];
                if (!have) {
                    mult = m;
                    have = true;
                } else if (m != mult) {
                    return false;
                }
            }
            if (!have || !mult.is_integer() || mult.is_negative() || mult.is_zero()) return false;
            current_[i] = mult.num();
            solutions_.push_back(current_);
            current_[i] = 0;
            return !collect_all_;
        }
        Int max_mult = (rb.hi / atom_lo_[i]).floor();
        Coordinates r = residual;
        for (Int m = 0; m <= max_mult; ++m) {
            current_[i] = m;
            if (dfs(i + 1, r)) return true;
            for (std::size_t t = 0; t < r.size(); ++t) r[t] -= atoms_[i][t];
        }
        current_[i] = 0;
        return false;
    }

    const FgMonoid& monoid_;
    const std::vector<Coordinates>& atoms_;
    bool collect_all_;
    std::vector<Rational> atom_lo_;
    std::vector<Int> current_;
    std::vector<std::vector<Int>> solutions_;
};

}  // namespace

BasisContext make_basis(std::vector<AlgebraicReal> constants) {
    if (constants.empty()) fail(ErrorCode::EmptyGeneratorList, "basis needs at least one constant");
    bool all_rational = true;
    for (const auto& c : constants)
        if (!c.is_rational()) all_rational = false;
    if (all_rational && constants.size() > 1)
        fail(ErrorCode::InvalidArgument,
             "two rational constants are never linearly independent over the rationals");
    BasisContext b;
    b.independence_verified = constants.size() == 1;
    b.constants = std::move(constants);
    return b;
}

FgMonoid fg_construct(BasisContext basis, std::vector<Coordinates> generators) {
    if (generators.empty()) fail(ErrorCode::EmptyGeneratorList, "no generators given");
    for (const auto& g : generators)
        if (g.size() != basis.dimension())
            fail(ErrorCode::DimensionMismatch, "generator dimension does not match the basis");

    // Tighten enclosures so every generator's positivity is certified by a
    // positive rational lower bound.
    for (auto& c : basis.constants) c = c.refined_to_width(Rational(1, 64), 64);
    for (const auto& g : generators) {
        if (is_zero_vector(g))
            fail(ErrorCode::NonPositiveGenerator, "the zero vector is not a valid generator");
        int steps = 0;
        while (true) {
            ValueBounds b = value_bounds(basis.constants, g);
            if (b.lo > Rational(0)) break;
            if (b.hi < Rational(0))
                fail(ErrorCode::NonPositiveGenerator, "generator value is negative");
            if (++steps > 256)
                fail(ErrorCode::NonPositiveGenerator,
                     "generator positivity undecided within the refinement budget; "
                     "check the declared independence");
            for (auto& c : basis.constants) c = c.refined();
        }
    }

    FgMonoid m;
    m.basis = std::move(basis);
    // Deduplicate, preserving first occurrence.
    for (const auto& g : generators) {
        if (std::find(m.generators.begin(), m.generators.end(), g) == m.generators.end())
            m.generators.push_back(g);
    }

    // A deduplicated generator is an atom exactly when it is not a
    // nonnegative combination of the others.
    for (std::size_t i = 0; i < m.generators.size(); ++i) {
        std::vector<Coordinates> others;
        for (std::size_t j = 0; j < m.generators.size(); ++j)
            if (j != i) others.push_back(m.generators[j]);
        bool expressible = false;
        if (!others.empty()) {
            FgSearch search(m, others, /*collect_all=*/false);
            expressible = !search.run(m.generators[i]).empty();
        }
        if (!expressible) {
            m.atoms.push_back(m.generators[i]);
            m.atom_indices.push_back(i);
        }
    }
    return m;
}

const std::vector<Coordinates>& fg_atoms(const FgMonoid& m) { return m.atoms; }

MembershipResult fg_member(const FgMonoid& m, const Coordinates& x) {
    check_dimension(m, x);
    FgSearch search(m, m.atoms, /*collect_all=*/false);
    auto solutions = search.run(x);
    MembershipResult out;
    out.member = !solutions.empty();
    if (out.member) out.witness = Factorization{solutions.front()};
    return out;
}

FactorizationSet fg_factorizations(const FgMonoid& m, const Coordinates& x) {
    check_dimension(m, x);
    FgSearch search(m, m.atoms, /*collect_all=*/true);
    FactorizationSet out;
    out.complete = true;  // finite by the enclosure-derived multiplicity bounds
    for (auto& sol : search.run(x)) out.items.push_back(Factorization{std::move(sol)});
    std::sort(out.items.begin(), out.items.end());
    return out;
}

LengthSet fg_length_set(const FgMonoid& m, const Coordinates& x) {
    return lengths_of(fg_factorizations(m, x));
}

// ---------------------------------------------------------------------------
// Exact rational linear algebra.
// ---------------------------------------------------------------------------

namespace {

// Row echelon form in place; returns pivot count. When tracker is non-null it
// must have the same row count and receives the same row operations, so rows
// of `rows` that vanish expose their dependency vector in `tracker`.
unsigned eliminate(std::vector<std::vector<Rational>>& rows,
                   std::vector<std::vector<Rational>>* tracker) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        if (tracker) std::swap((*tracker)[sel], (*tracker)[pivot_row]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col] / rows[pivot_row][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] -= factor * rows[pivot_row][c];
            if (tracker)
                for (std::size_t c = 0; c < (*tracker)[r].size(); ++c)
                    (*tracker)[r][c] -= factor * (*tracker)[pivot_row][c];
        }
        ++pivot_row;
    }
    return static_cast<unsigned>(pivot_row);
}

bool row_is_zero(const std::vector<Rational>& row) {
    return std::all_of(row.begin(), row.end(), [](const Rational& c) { return c.is_zero(); });
}

}  // namespace

unsigned matrix_rank(const std::vector<std::vector<Rational>>& rows) {
    auto work = rows;
    return eliminate(work, nullptr);
}

std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& rows) {
    // Dependencies among the given rows: z with sum z_i row_i = 0.
    auto work = rows;
    std::vector<std::vector<Rational>> tracker(rows.size(),
                                               std::vector<Rational>(rows.size(), Rational(0)));
    for (std::size_t i = 0; i < rows.size(); ++i) tracker[i][i] = Rational(1);
    eliminate(work, &tracker);
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t r = 0; r < work.size(); ++r)
        if (row_is_zero(work[r])) kernel.push_back(tracker[r]);
    return kernel;
}

std::optional<std::vector<Rational>> solve_linear_system(
    const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs) {
    // Solve rows * x = rhs by eliminating the augmented matrix.
    const std::size_t n = rows.size();
    if (rhs.size() != n) fail(ErrorCode::DimensionMismatch, "rhs size mismatch");
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(ncols + 1, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) aug[r][c] = rows[r][c];
        aug[r][ncols] = rhs[r];
    }
    // Forward elimination restricted to the coefficient columns.
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < ncols && pivot_row < n; ++col) {
        std::size_t sel = pivot_row;
        while (sel < n && aug[sel][col].is_zero()) ++sel;
        if (sel == n) continue;
        std::swap(aug[sel], aug[pivot_row]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == pivot_row || aug[r][col].is_zero()) continue;
            Rational factor = aug[r][col] / aug[pivot_row][col];
            for (std::size_t c = col; c <= ncols; ++c) aug[r][c] -= factor * aug[pivot_row][c];
        }
        pivot_col.push_back(col);
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < n; ++r)
        if (!aug[r][ncols].is_zero()) return std::nullopt;  // inconsistent
    std::vector<Rational> x(ncols, Rational(0));
    for (std::size_t r = 0; r < pivot_row; ++r)
        x[pivot_col[r]] = aug[r][ncols] / aug[r][pivot_col[r]];
    return x;
}

namespace {

std::vector<Int> normalize_kernel_vector(const std::vector<Rational>& v) {
    Int lcm_den = 1;
    for (const auto& c : v) lcm_den = int_lcm(lcm_den, c.den());
    std::vector<Int> z;
    z.reserve(v.size());
    for (const auto& c : v) z.push_back(c.num() * (lcm_den / c.den()));
    Int g = 0;
    for (const auto& c : z) g = int_gcd(g, int_abs(c));
    if (g > 1)
        for (auto& c : z) c /= g;
    for (const auto& c : z) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& e : z) e = -e;
        break;
    }
    return z;
}

}  // namespace

UfmCertificate fg_is_ufm(const FgMonoid& m) {
    UfmCertificate out;
    auto kernel = kernel_basis(m.atoms);
    if (kernel.empty()) {
        out.is_ufm = true;
        out.note = "the atoms are linearly independent over the rationals: rank " +
                   std::to_string(fg_rank(m)) + " equals the atom count " +
                   std::to_string(m.atoms.size());
        return out;
    }
    out.is_ufm = false;
    out.kernel_vector = normalize_kernel_vector(kernel.front());
    out.note = "a kernel vector of the atom matrix splits into two distinct factorizations of "
               "one element";
    return out;
}

HfmCertificate fg_is_hfm(const FgMonoid& m) {
    HfmCertificate out;
    std::vector<Rational> ones(m.atoms.size(), Rational(1));
    auto w = solve_linear_system(m.atoms, ones);
    if (w) {
        out.is_hfm = true;
        out.functional = std::move(*w);
        out.note = "a rational length functional takes the value 1 on every atom, so all "
                   "factorizations of an element have the same length";
        return out;
    }
    out.is_hfm = false;
    for (const auto& z : kernel_basis(m.atoms)) {
        Rational sum(0);
        for (const auto& c : z) sum += c;
        if (!sum.is_zero()) {
            out.kernel_vector = normalize_kernel_vector(z);
            break;
        }
    }
    out.note = "a kernel vector with nonzero coordinate sum yields two factorizations of one "
               "element with different lengths";
    return out;
}

unsigned fg_rank(const FgMonoid& m) { return matrix_rank(m.atoms); }

}  // namespace posmon
