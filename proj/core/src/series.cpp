#include "mqtlab/series.hpp"

#include "mqtlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mqtlab::mqt {

namespace {

// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble add(const DoubleDouble& a, const DoubleDouble& b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

// 1 / sqrt(x) for an integer x < 2^63: one Newton step on the double estimate,
// with the residual 1 - x y^2 formed exactly enough for ~106 bits.
inline DoubleDouble inverse_sqrt(std::uint64_t x) {
  const double x_hi = static_cast<double>(x);
  const double x_lo = static_cast<double>(static_cast<std::int64_t>(x - static_cast<std::uint64_t>(x_hi)));
  const double y0 = 1.0 / std::sqrt(x_hi);
  const DoubleDouble y2 = two_prod(y0, y0);
  const DoubleDouble s = two_prod(x_hi, y2.hi);
  const double residual = (1.0 - s.hi) - s.lo - x_hi * y2.lo - x_lo * y2.hi;
  return two_sum(y0, 0.5 * y0 * residual);
}

BigReal to_big(const DoubleDouble& x) { return BigReal(x.hi) + BigReal(x.lo); }

// Running sums over u_m = 1/sqrt(m^2 - 1), m = 2, 3, ...
//   plain(N) = sum_{m=2}^{N+1} u_m
//   evenS(N) = 2 sum_{m even, 2..2N} u_m,  oddT(N) = 2 sum_{m odd, 3..2N+1} u_m
template <class Acc, class Term, class Add, class Convert>
void sweep(std::span<const std::uint64_t> ns, std::span<const SeriesVariant> variants, Term term, Add plus,
           Convert convert, std::vector<SeriesStudyRow>& out) {
  const bool need_plain = std::find(variants.begin(), variants.end(), SeriesVariant::plain) != variants.end();
  const bool need_split = std::any_of(variants.begin(), variants.end(),
                                      [](SeriesVariant v) { return v != SeriesVariant::plain; });
  const std::uint64_t n_max = ns.back();
  const std::uint64_t m_max = need_split ? 2 * n_max + 1 : n_max + 1;

  Acc plain{}, even{}, odd{};
  std::size_t next_plain = 0, next_split = 0;
  std::vector<BigReal> plain_sums, even_sums, odd_sums;
  for (std::uint64_t m = 2; m <= m_max; ++m) {
    const Acc u = term(m);
    plain = plus(plain, u);
    if (m % 2 == 0) even = plus(even, u); else odd = plus(odd, u);
    if (need_plain && next_plain < ns.size() && m == ns[next_plain] + 1) {
      plain_sums.push_back(convert(plain));
      ++next_plain;
    }
    if (need_split && next_split < ns.size() && m == 2 * ns[next_split] + 1) {
      even_sums.push_back(2 * convert(even));
      odd_sums.push_back(2 * convert(odd));
      ++next_split;
    }
  }

  for (auto variant : variants)
    for (std::size_t i = 0; i < ns.size(); ++i) {
      BigReal sum;
      switch (variant) {
        case SeriesVariant::plain: sum = plain_sums[i]; break;
        case SeriesVariant::evenS: sum = even_sums[i]; break;
        case SeriesVariant::oddT: sum = odd_sums[i]; break;
        case SeriesVariant::splitSum: sum = even_sums[i] + odd_sums[i]; break;
      }
      const BigReal n(ns[i]);
      out.push_back({variant, ns[i], sum, sum - log(2 * n)});
    }
}

std::vector<SeriesStudyRow> sweep_with(SummationKernel kernel, std::span<const std::uint64_t> ns,
                                       std::span<const SeriesVariant> variants) {
  if (kernel == SummationKernel::automatic)
    kernel = ns.back() <= kWorkingPrecisionLimit ? SummationKernel::working_precision
                                                 : SummationKernel::double_double;
  std::vector<SeriesStudyRow> rows;
  if (kernel == SummationKernel::working_precision) {
    sweep<BigReal>(
        ns, variants,
        [](std::uint64_t m) {
          const BigReal bm(m);
          return BigReal(1 / sqrt(bm * bm - 1));
        },
        [](const BigReal& a, const BigReal& b) { return BigReal(a + b); },
        [](const BigReal& a) { return a; }, rows);
  } else {
    sweep<DoubleDouble>(
        ns, variants, [](std::uint64_t m) { return inverse_sqrt(m * m - 1); }, add, to_big, rows);
  }
  return rows;
}

void check_n(std::uint64_t n) {
  if (n < 1) throw DomainError("series needs N >= 1");
  if (n > kSeriesGuard)
    throw ResourceError("series length " + std::to_string(n) + " exceeds the brute-force guard of " +
                        std::to_string(kSeriesGuard));
}

}  // namespace

std::string to_string(SeriesVariant variant) {
  switch (variant) {
    case SeriesVariant::plain: return "plain";
    case SeriesVariant::evenS: return "evenS";
    case SeriesVariant::oddT: return "oddT";
    case SeriesVariant::splitSum: return "splitSum";
  }
  return "?";
}

std::optional<SeriesVariant> parse_series_variant(std::string_view text) {
  for (auto v : kAllSeriesVariants)
    if (to_string(v) == text) return v;
  return std::nullopt;
}

BigReal sigma_series(std::uint64_t n, SeriesVariant variant, SummationKernel kernel) {
  check_n(n);
  const std::uint64_t ns[] = {n};
  const SeriesVariant vs[] = {variant};
  return sweep_with(kernel, ns, vs).front().sum;
}

SeriesStudy series_study(std::span<const SeriesVariant> variants, std::span<const std::uint64_t> ns_in) {
  std::vector<std::uint64_t> ns(ns_in.begin(), ns_in.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (ns.empty()) throw DomainError("series study needs at least one N");
  for (auto n : ns) check_n(n);
  if (variants.empty()) throw DomainError("series study needs at least one variant");

  SeriesStudy study;
  // The double-double kernel carries ~31 digits for every N; use it for the
  // whole sweep once any N is beyond the working-precision limit so that rows
  // of one variant are mutually consistent.
  study.rows = sweep_with(SummationKernel::automatic, ns, variants);

  if (ns.size() >= 2) {
    for (auto variant : variants) {
      const SeriesStudyRow* r1 = nullptr;
      const SeriesStudyRow* r2 = nullptr;
      for (const auto& row : study.rows)
        if (row.variant == variant) {
          if (row.n == ns[ns.size() - 2]) r1 = &row;
          if (row.n == ns.back()) r2 = &row;
        }
      const BigReal n1(r1->n), n2(r2->n);
      const BigReal step = r2->fitted - r1->fitted;
      study.summaries.push_back({variant, r2->fitted + step * n1 / (n2 - n1),
                                 (r2->sum - r1->sum) / log(n2 / n1), abs(step)});
    }
  }
  return study;
}

}  // namespace mqtlab::mqt
