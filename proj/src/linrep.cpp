#include "regseq/linrep.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "regseq/data_dir.hpp"

namespace regseq::linrep {

namespace {

Rational rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::runtime_error("rational entries must be integers or \"p/q\" strings");
}

nlohmann::json rat_to_json(const Rational& r) {
    if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return to_string(r);
}

}  // namespace

RatVec row_times_matrix(const RatVec& row, const RatMat& m) {
    const std::size_t d = row.size();
    RatVec out(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (row[i] == 0) continue;
        const RatVec& mi = m[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (mi[j] != 0) out[j] += row[i] * mi[j];
        }
    }
    return out;
}

RatVec matrix_times_col(const RatMat& m, const RatVec& col) {
    const std::size_t d = col.size();
    RatVec out(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        const RatVec& mi = m[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (mi[j] != 0 && col[j] != 0) out[i] += mi[j] * col[j];
        }
    }
    return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

void LinRep::validate() const {
    if (base < 2) throw std::runtime_error("linear representation base must be >= 2");
    if (v.size() != dim || w.size() != dim)
        throw std::runtime_error("vector length disagrees with dimension");
    if (matrices.size() != base)
        throw std::runtime_error("need one matrix per digit, got " +
                                 std::to_string(matrices.size()));
    for (const auto& m : matrices) {
        if (m.size() != dim) throw std::runtime_error("matrix row count disagrees with dimension");
        for (const auto& row : m)
            if (row.size() != dim)
                throw std::runtime_error("matrix column count disagrees with dimension");
    }
}

LinRep LinRep::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open linear representation file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
    }
    try {
        LinRep r;
        r.base = j.at("k").get<unsigned>();
        r.dim = j.at("dim").get<std::size_t>();
        for (const auto& x : j.at("v")) r.v.push_back(rat_from_json(x));
        for (const auto& x : j.at("w")) r.w.push_back(rat_from_json(x));
        for (const auto& jm : j.at("matrices")) {
            RatMat m;
            for (const auto& jrow : jm) {
                RatVec row;
                for (const auto& x : jrow) row.push_back(rat_from_json(x));
                m.push_back(std::move(row));
            }
            r.matrices.push_back(std::move(m));
        }
        r.validate();
        return r;
    } catch (const std::exception& e) {
        throw std::runtime_error("bad linear representation in " + path.string() + ": " +
                                 e.what());
    }
}

void LinRep::save(const std::filesystem::path& path) const {
    validate();
    nlohmann::json j;
    j["k"] = base;
    j["dim"] = dim;
    for (const auto& x : v) j["v"].push_back(rat_to_json(x));
    for (const auto& x : w) j["w"].push_back(rat_to_json(x));
    j["matrices"] = nlohmann::json::array();
    for (const auto& m : matrices) {
        nlohmann::json jm = nlohmann::json::array();
        for (const auto& row : m) {
            nlohmann::json jrow = nlohmann::json::array();
            for (const auto& x : row) jrow.push_back(rat_to_json(x));
            jm.push_back(std::move(jrow));
        }
        j["matrices"].push_back(std::move(jm));
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << j.dump(1) << '\n';
}

Rational eval(const LinRep& r, std::uint64_t n) {
    if (n == 0)
        throw std::domain_error(
            "eval(r, 0) is out of domain; base values belong to recurrence systems");
    return eval_word(r, words::to_base(n, r.base));
}

Rational eval_word(const LinRep& r, const words::Word& y) {
    RatVec col = r.w;
    for (auto it = y.digits.rbegin(); it != y.digits.rend(); ++it) {
        if (*it >= r.base) throw std::invalid_argument("digit out of range for representation");
        col = matrix_times_col(r.matrices[*it], col);
    }
    return dot(r.v, col);
}

namespace {

void eval_range_walk(const LinRep& r, const RatVec& row, std::uint64_t n, std::uint64_t n_max,
                     std::vector<Rational>& out) {
    out[n] = dot(row, r.w);
    for (unsigned a = 0; a < r.base; ++a) {
        const std::uint64_t child = n * r.base + a;
        if (child > n_max || child < n) break;  // overflow guard
        eval_range_walk(r, row_times_matrix(row, r.matrices[a]), child, n_max, out);
    }
}

}  // namespace

std::vector<Rational> eval_range(const LinRep& r, std::uint64_t n_max) {
    std::vector<Rational> out(n_max + 1, Rational(0));
    for (unsigned a = 1; a < r.base && a <= n_max; ++a)
        eval_range_walk(r, row_times_matrix(r.v, r.matrices[a]), a, n_max, out);
    return out;
}

ZeroPattern zero_pattern(const LinRep& r) {
    const std::size_t d = r.dim;
    auto advance = [&](const std::vector<bool>& from, unsigned first_digit) {
        std::vector<bool> to(d, false);
        for (unsigned a = first_digit; a < r.base; ++a)
            for (std::size_t i = 0; i < d; ++i)
                if (from[i])
                    for (std::size_t j = 0; j < d; ++j)
                        if (r.matrices[a][i][j] != 0) to[j] = true;
        return to;
    };

    std::vector<bool> seed(d, false);
    for (std::size_t i = 0; i < d; ++i) seed[i] = (r.v[i] != 0);

    // One step through a nonzero leading digit, then reflexive-transitive
    // closure under every digit.
    std::vector<bool> support = advance(seed, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<bool> next = advance(support, 0);
        for (std::size_t j = 0; j < d; ++j)
            if (next[j] && !support[j]) {
                support[j] = true;
                changed = true;
            }
    }
    return ZeroPattern{std::move(support)};
}

RatVec RowBasis::reduce(const RatVec& row, RatVec* alphas) const {
    RatVec u = row;
    if (alphas) alphas->assign(echelon_.size(), Rational(0));
    for (std::size_t j = 0; j < echelon_.size(); ++j) {
        const Rational a = u[pivot_[j]];
        if (a == 0) continue;
        if (alphas) (*alphas)[j] = a;
        for (std::size_t c = 0; c < dim_; ++c)
            if (echelon_[j][c] != 0) u[c] -= a * echelon_[j][c];
    }
    return u;
}

bool RowBasis::insert(const RatVec& row) {
    if (row.size() != dim_) throw std::invalid_argument("row dimension mismatch");
    RatVec alphas;
    RatVec u = reduce(row, &alphas);

    std::size_t p = dim_;
    for (std::size_t c = 0; c < dim_; ++c)
        if (u[c] != 0) {
            p = c;
            break;
        }
    if (p == dim_) return false;

    const Rational lead = u[p];
    for (auto& x : u) x /= lead;

    // Expression of the new echelon row over original insertions: subtract
    // the alpha-weighted combos, then scale; the new original gets index m.
    const std::size_t m = combo_.empty() ? 0 : combo_.front().size();
    RatVec combo(m + 1, Rational(0));
    combo[m] = Rational(1) / lead;
    for (std::size_t j = 0; j < echelon_.size(); ++j) {
        if (alphas[j] == 0) continue;
        for (std::size_t t = 0; t < combo_[j].size(); ++t)
            combo[t] -= alphas[j] * combo_[j][t] / lead;
    }
    for (auto& c : combo_) c.resize(m + 1, Rational(0));

    // Full reduction: clear the new pivot column from the existing rows.
    for (std::size_t j = 0; j < echelon_.size(); ++j) {
        const Rational a = echelon_[j][p];
        if (a == 0) continue;
        for (std::size_t c = 0; c < dim_; ++c)
            if (u[c] != 0) echelon_[j][c] -= a * u[c];
        for (std::size_t t = 0; t <= m; ++t)
            if (combo[t] != 0) combo_[j][t] -= a * combo[t];
    }

    echelon_.push_back(std::move(u));
    pivot_.push_back(p);
    combo_.push_back(std::move(combo));
    return true;
}

bool RowBasis::contains(const RatVec& row) const {
    const RatVec u = reduce(row, nullptr);
    for (const auto& x : u)
        if (x != 0) return false;
    return true;
}

std::optional<RatVec> RowBasis::coefficients(const RatVec& row) const {
    RatVec alphas;
    const RatVec u = reduce(row, &alphas);
    for (const auto& x : u)
        if (x != 0) return std::nullopt;
    const std::size_t m = combo_.empty() ? 0 : combo_.front().size();
    RatVec coeffs(m, Rational(0));
    for (std::size_t j = 0; j < echelon_.size(); ++j) {
        if (alphas[j] == 0) continue;
        for (std::size_t t = 0; t < combo_[j].size(); ++t)
            coeffs[t] += alphas[j] * combo_[j][t];
    }
    return coeffs;
}

namespace {

void subspace_seed_walk(const LinRep& r, const RatVec& row, std::size_t remaining,
                        std::vector<RatVec>& seeds) {
    if (remaining == 0) {
        seeds.push_back(row);
        return;
    }
    for (unsigned a = 0; a < r.base; ++a)
        subspace_seed_walk(r, row_times_matrix(row, r.matrices[a]), remaining - 1, seeds);
}

}  // namespace

ReachableSubspace reachable_subspace(const LinRep& r, std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("subspace depth must be >= 1");

    // Seed rows v * M_x for canonical x of length exactly `depth`, in lex
    // order of x.
    std::vector<RatVec> seeds;
    for (unsigned a = 1; a < r.base; ++a)
        subspace_seed_walk(r, row_times_matrix(r.v, r.matrices[a]), depth - 1, seeds);

    ReachableSubspace out{depth, {}, RowBasis(r.dim)};
    std::vector<RatVec> worklist;
    for (const auto& s : seeds)
        if (out.span.insert(s)) {
            out.basis.push_back(s);
            worklist.push_back(s);
        }
    for (std::size_t i = 0; i < worklist.size(); ++i) {
        const RatVec b = worklist[i];
        for (unsigned a = 0; a < r.base; ++a) {
            RatVec u = row_times_matrix(b, r.matrices[a]);
            if (out.span.insert(u)) {
                out.basis.push_back(u);
                worklist.push_back(std::move(u));
            }
        }
    }
    return out;
}

LinRep tm_fixture() {
    return LinRep::load(data_file("tm23.json"));
}

LinRep example2x2_fixture() {
    return LinRep::load(data_file("example2x2.json"));
}

}  // namespace regseq::linrep
