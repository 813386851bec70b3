#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twwcol/graph.hpp"
#include "twwcol/trigraph.hpp"

namespace twwcol {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);  // "p" or "p/q"
double to_double(const Rational& q);

struct ScolUpper {
    BigInt exact;       // (3 + d * sum_{i<r} (d-1)^i) * s, with 0^0 = 1
    BigInt simplified;  // (d^r + 3) * s, with 0^r = 0 for r >= 1
};
ScolUpper eval_scol_upper(int d, int s, int r);

// 2s, 3s, 5s for d = 0, 1, 2; 3 (d-1)^r s for d >= 3.
BigInt eval_scol_cases(int d, int s, int r);

struct WcolFromScols {
    double approx = 0;  // rounded up to the next representable double
    BigInt ceiling;     // exact ceiling of 2^{r-1} max_k scols[k-1]^{r/k}
};
// scols[k-1] = scol_k for k = 1..r.
WcolFromScols eval_wcol_from_scols(const std::vector<int>& scols, int r);
// Exact test of value <= 2^{r-1} max_k scols[k-1]^{r/k}, i.e. whether some k
// has value^k <= 2^{(r-1)k} scols[k-1]^r.
bool wcol_from_scols_holds(long long value, const std::vector<int>& scols, int r);

Rational eval_wcol_upper(int d, int s, int r);  // ((2d+6)s)^r / 2
Rational eval_grad_upper(int d, int s, int r);  // ((2d+6)s)^{2r+1} / 2

// (d/2) ((d-2)/4)^{2^floor(log2 r) - 1}; DomainError unless d >= 7 and r >= 1.
Rational eval_scol_lower_girth(int d, int r);
// (ds/4) ((d-4)/8)^{r-1}; DomainError unless d >= 14, s >= 1 and r a power of two.
Rational eval_lower_combined(int d, int s, int r);
// d^{2(r-1)}; DomainError unless r >= 4.
BigInt eval_adm_lower_subdiv(int d, int r);

enum class Verdict { Holds, Violated, NotApplicable, Discrepancy, Inconclusive };
std::string to_string(Verdict v);

struct BoundCheck {
    std::string name;
    int r = 0;
    std::string basis;  // "order", "exact" or "formula"
    std::optional<long long> value;
    std::string bound;  // exact value as text
    Verdict verdict = Verdict::NotApplicable;
    std::string note;
};

struct ParamRow {
    int r = 0;
    int order_wcol = 0, order_scol = 0, order_adm = 0;
    std::optional<int> exact_wcol, exact_scol, exact_adm;
};

struct BoundReport {
    std::string instance;
    int n = 0;
    std::size_t m = 0;
    int d = 0;                // width of the given sequence
    std::optional<int> tww;   // exact twin-width when computed
    int s = 0;                // bomega
    bool connected = true;
    std::string order;        // how the order was built
    std::vector<ParamRow> rows;
    std::vector<BoundCheck> checks;
    std::vector<std::string> errors;  // fields skipped because of resource limits

    bool violated() const;
};

struct VerifyOptions {
    std::string instance = "instance";
    int r_min = 1;
    int r_max = 3;
    int exact_limit = 8;   // exact wcol/scol/adm up to this many vertices
    int tww_limit = 9;     // exact twin-width up to this many vertices
    std::uint64_t budget = 10'000'000;
};

// Joins the nice order built from `seq`, per-order and exact parameters and
// every applicable closed-form bound for r in [r_min, r_max].
BoundReport verify_instance(const Graph& g, const ContractionSequence& seq, const VerifyOptions& options = {});

void write_reports_json(std::ostream& out, const std::vector<BoundReport>& reports);
// One line per check: instance,n,m,d,tww,s,r,check,basis,value,bound,verdict,note
void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports);

}  // namespace twwcol
