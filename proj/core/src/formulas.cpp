#include "msgpt/formulas.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace msgpt {

namespace mp = boost::multiprecision;

Count sat_mul(Count a, Count b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

Count sat_pow(Count base, int exp) {
  Count result = 1;
  for (int k = 0; k < exp; ++k) {
    result = sat_mul(result, base);
    if (result == kSaturated) break;
  }
  return result;
}

ProblemInstance ProblemInstance::make_out_of_domain(Count n, Count d, int s) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (n < d) throw std::invalid_argument("n must be >= d");
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  return ProblemInstance{n, d, s};
}

ProblemInstance ProblemInstance::make(Count n, Count d, int s) {
  ProblemInstance p = make_out_of_domain(n, d, s);
  if (!p.in_domain()) {
    throw std::invalid_argument("instance " + p.to_string() +
                                " violates n >= d*2^s; use make_out_of_domain");
  }
  return p;
}

bool ProblemInstance::in_domain() const {
  return n >= sat_mul(d, sat_pow(2, s));
}

std::string ProblemInstance::to_string() const {
  std::ostringstream os;
  os << "(n=" << n << ", d=" << d << ", s=" << s << ")";
  return os.str();
}

BracketD bracket_td(Count n, Count d, int s) {
  if (d < 1 || s < 1) throw std::invalid_argument("bracket_td: need d >= 1, s >= 1");
  if (n <= d) throw std::invalid_argument("bracket_td: need n > d");

  // Smallest t >= 1 with d (t+1)^s >= n; minimality gives d t^s < n.
  Count lo = 1;
  Count hi = n;
  while (lo < hi) {
    const Count mid = lo + (hi - lo) / 2;
    if (sat_mul(d, sat_pow(mid + 1, s)) >= n) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const Count t = lo;

  int i = 0;
  while (i < s - 1 &&
         sat_mul(d, sat_mul(sat_pow(t, s - i - 1), sat_pow(t + 1, i + 1))) < n) {
    ++i;
  }

  const Count block = sat_mul(sat_pow(t, s - i - 1), sat_pow(t + 1, i));
  const Count groups = (n + block - 1) / block;  // dt + j + 1
  const Count j = groups - sat_mul(d, t) - 1;
  if (j < 0 || j > d - 1) throw std::logic_error("bracket_td: interval chain broken");
  return BracketD{t, i, j};
}

Count bracket_lower(const BracketD& b, Count d, int s) {
  const Count block = sat_mul(sat_pow(b.t, s - b.i - 1), sat_pow(b.t + 1, b.i));
  return sat_mul(sat_mul(d, b.t) + b.j, block);
}

Count bracket_upper(const BracketD& b, Count d, int s) {
  const Count block = sat_mul(sat_pow(b.t, s - b.i - 1), sat_pow(b.t + 1, b.i));
  return sat_mul(sat_mul(d, b.t) + b.j + 1, block);
}

Bracket1 bracket_t1(Count n, int s) {
  if (n <= 1) throw std::invalid_argument("bracket_t1: need n >= 2");
  const BracketD b = bracket_td(n, 1, s);
  return Bracket1{b.t, b.i};
}

TestCount t1_closed(Count n, int s) {
  if (n <= 1) {
    throw std::invalid_argument("t1_closed: n <= 1 has no finite closed form (T_1(1, s) is Unreachable)");
  }
  const Bracket1 b = bracket_t1(n, s);
  return TestCount(static_cast<Count>(s) * b.t + b.i + 1);
}

Count dual_capacity(Count budget, int s) {
  if (s < 1) throw std::invalid_argument("dual_capacity: need s >= 1");
  if (budget < s) throw std::invalid_argument("dual_capacity: budget must be >= s");
  const Count q = budget / s;
  const int r = static_cast<int>(budget % s);
  const Count value = sat_mul(sat_pow(q, s - r), sat_pow(q + 1, r));
  if (value == kSaturated) throw std::overflow_error("dual_capacity: exceeds 63 bits");
  return value;
}

TestCount td2_closed(Count n, Count d) {
  if (d < 1) throw std::invalid_argument("td2_closed: need d >= 1");
  if (n < 4 * d) throw std::invalid_argument("td2_closed: need n >= 4d");
  const BracketD b = bracket_td(n, d, 2);
  if (!b.within_two_stage_range()) {
    throw std::domain_error("td2_closed: bracket t = 1 is outside the two-stage closed-form range");
  }
  return TestCount(2 * d * b.t + d * b.i + b.j + 1);
}

TestCount md_count(Count n, Count d, int s) {
  const BracketD b = bracket_td(n, d, s);
  return TestCount(d * s * b.t + d * b.i + b.j + 1);
}

Count lower_bound(Count n, Count d, int s) {
  if (n < 1 || d < 1 || s < 1) throw std::invalid_argument("lower_bound: need n, d, s >= 1");

  const mp::cpp_int ds = mp::cpp_int(d) * s;
  const mp::cpp_int rhs = mp::pow(ds, static_cast<unsigned>(s)) * n;
  auto enough = [&](Count v) {
    return mp::cpp_int(d) * mp::pow(mp::cpp_int(v), static_cast<unsigned>(s)) >= rhs;
  };

  const long double estimate = static_cast<long double>(d) * s *
      std::pow(static_cast<long double>(n) / static_cast<long double>(d), 1.0L / s);
  Count v = std::max<Count>(1, static_cast<Count>(std::ceil(estimate)));
  while (v > 1 && enough(v - 1)) --v;
  while (!enough(v)) ++v;
  return v;
}

AdvisoryValue upper_bound(Count n, Count d, int s) {
  const Count half = (d * s + 1) / 2;
  const Count threshold = sat_mul(d, sat_pow(half, s));
  return AdvisoryValue{lower_bound(n, d, s) + 1, n >= threshold};
}

namespace {

Count to_count(const mp::cpp_int& x, const char* what) {
  if (x > mp::cpp_int(kSaturated)) throw std::overflow_error(std::string(what) + ": exceeds 63 bits");
  return x.convert_to<Count>();
}

}  // namespace

Count threshold_n1(Count d, int s) {
  if (d < 2 || s < 3) throw std::invalid_argument("threshold_n1: need d >= 2, s >= 3");
  using Real = mp::cpp_dec_float_50;
  const Real e = mp::exp(Real(1));
  const Real inner = e / 2 * mp::pow(Real(d), 2 * s - 3);
  const Real value = Real(d) * mp::pow(inner, s);
  const mp::cpp_int rounded_up(mp::ceil(value));
  return to_count(rounded_up, "threshold_n1");
}

Count threshold_n2(Count d, int s) {
  if (d < 2 || s < 3) throw std::invalid_argument("threshold_n2: need d >= 2, s >= 3");
  const auto us = static_cast<unsigned>(s);
  const mp::cpp_int num = mp::pow(mp::cpp_int(d) * s, us * (us - 1)) *
                          mp::pow(mp::cpp_int(d), (us - 1) * (us - 1));
  const mp::cpp_int den = mp::pow(mp::cpp_int(s - 1), us * (us - 1)) * mp::pow(mp::cpp_int(2), us);
  return to_count((num + den - 1) / den, "threshold_n2");
}

Partition average_partition(Count n, Count m) {
  if (m < 1 || m > n) throw std::invalid_argument("average_partition: need 1 <= m <= n");
  const Count q = n / m;
  const Count r = n % m;
  Partition parts(static_cast<std::size_t>(m), q);
  for (Count k = 0; k < r; ++k) parts[static_cast<std::size_t>(k)] = q + 1;
  return parts;
}

Count average_partition_top_sum(Count n, Count m, Count k) {
  const Count q = n / m;
  const Count r = n % m;
  const Count take = std::min(k, m);
  return take * q + std::min(take, r);
}

Count integer_root_floor(Count x, int k) {
  if (x < 0 || k < 1) throw std::invalid_argument("integer_root_floor: need x >= 0, k >= 1");
  if (x < 2 || k == 1) return x;
  Count r = static_cast<Count>(std::pow(static_cast<long double>(x), 1.0L / k));
  while (r > 0 && sat_pow(r, k) > x) --r;
  while (sat_pow(r + 1, k) <= x) ++r;
  return r;
}

}  // namespace msgpt
