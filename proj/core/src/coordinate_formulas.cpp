#include "zdmd/coordinate_formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace zdmd {

MetricCode CodeBranch::code(int rho, std::size_t k) const {
  const int kk = static_cast<int>(k);
  MetricCode out(k, background);
  auto put = [&](int pos, Distance value) {
    if (pos < 1 || pos > kk) {
      throw std::logic_error("branch " + name + " writes position " + std::to_string(pos) +
                             " of a code of length " + std::to_string(k));
    }
    out[static_cast<std::size_t>(pos - 1)] = value;
  };
  put(1, first);
  for (const auto& seg : segments) {
    for (int pos = seg.from; pos <= seg.to; ++pos) put(pos, seg.value);
  }
  if (rho_value) put(rho, *rho_value);
  return out;
}

namespace {

using Seg = CodeBranch::Segment;

// Positions written relative to q, e.g. "q-3", matching the table headers.
std::string qname(int q, int value) {
  const int d = q - value;
  if (d == 0) return "q";
  return d > 0 ? "q-" + std::to_string(d) : "q+" + std::to_string(-d);
}

class Tables {
 public:
  Tables(std::uint64_t p, std::uint64_t q)
      : regime_(classify(p, q)), p_(static_cast<int>(p)), q_(static_cast<int>(q)) {
    if (regime_ != Regime::p_three && regime_ != Regime::general &&
        regime_ != Regime::twice_p_minus_3) {
      throw std::invalid_argument("no coordinate tables for regime " + to_string(regime_));
    }
    k_ = regime_ == Regime::twice_p_minus_3 ? q_ - 1 : q_ - 2;
  }

  int k() const { return k_; }

  std::vector<CodeBranch> branches(const BsLabel& label) const {
    using K = BsLabel::Kind;
    switch (label.kind) {
      case K::a: return a_family();
      case K::q: return q_family(label.index);
      case K::s: throw std::invalid_argument("s vertices exist only for p = 2");
      case K::c:
        if (regime_ == Regime::p_three) return c_p3();
        if (label.family == 1) return c_one();
        if (label.family == 2) return c_two();
        return c_high(label.family);
      case K::b: {
        if (regime_ == Regime::p_three) return b_p3();
        const int half = (p_ - 1) / 2;
        if (label.family == half) return b_top();
        if (label.family == (p_ - 3) / 2) return b_block();
        return b_low(label.family);
      }
    }
    return {};
  }

 private:
  bool has_tail() const { return regime_ != Regime::twice_p_minus_3; }
  std::string km1() const { return qname(q_, k_ - 1); }
  std::string kname() const { return qname(q_, k_); }
  std::string kp1() const { return qname(q_, k_ + 1); }

  static CodeBranch make(std::string family, std::string cond, int lo, int hi, Distance first,
                         Distance background, std::vector<Seg> segs = {},
                         std::optional<Distance> rho_value = std::nullopt) {
    return {family + ":" + cond, lo, hi, first, background, std::move(segs), rho_value,
            std::nullopt};
  }

  std::vector<CodeBranch> a_family() const {
    const std::string f = "a_rho";
    std::vector<CodeBranch> out{
        make(f, "rho=2", 2, 2, 4, 3, {}, 1),
        make(f, "3<=rho<=" + km1(), 3, k_ - 1, 4, 3, {}, 1),
        make(f, "rho=" + kname(), k_, k_, 4, 3, {}, 1),
    };
    if (has_tail()) out.push_back(make(f, "rho=" + kp1(), k_ + 1, k_ + 1, 4, 3));
    return out;
  }

  std::vector<CodeBranch> q_family(int nu) const {
    const std::string f = "q_nu";
    if (regime_ == Regime::p_three) {
      return {make(f, "nu=1", 1, 1, 2, 3), make(f, "nu=2", 2, 2, 2, 1)};
    }
    return {
        make(f, "nu=1", 1, 1, 2, 3, {{2, 3, 1}}),
        make(f, "2<=nu<=p-3", 2, p_ - 3, 2, 3, {{2 * nu, 2 * nu + 1, 1}}),
        make(f, "nu=p-2", p_ - 2, p_ - 2, 2, 3, {{2 * nu, k_, 1}}),
        make(f, "nu=p-1", p_ - 1, p_ - 1, 2, 3),
    };
  }

  std::vector<CodeBranch> b_p3() const {
    const std::string f = "b1_rho";
    return {make(f, "rho=1", 1, 1, 1, 2), make(f, "rho=q-1", q_ - 1, q_ - 1, 3, 2)};
  }

  std::vector<CodeBranch> c_p3() const {
    const std::string f = "c1_rho";
    auto first = make(f, "rho=1", 1, 1, 1, 4);
    first.flag = "final index q-2 printed twice; read as a single run of 4s up to q-2";
    return {
        first,
        make(f, "rho=2", 2, 2, 3, 4, {}, 2),
        make(f, "3<=rho<=q-3", 3, q_ - 3, 3, 4, {}, 2),
        make(f, "rho=q-2", q_ - 2, q_ - 2, 3, 4, {}, 2),
        make(f, "rho=q-1", q_ - 1, q_ - 1, 3, 4),
    };
  }

  // Shared shape of the C and B tables: rho = 1 sits next to a_1, every other
  // listed rho is at distance 2 from its own-subscript landmark.
  void push_tail(std::vector<CodeBranch>& out, const std::string& f, int from,
                 const std::vector<Seg>& segs) const {
    out.push_back(make(f, std::to_string(from) + "<=rho<=" + km1(), from, k_ - 1, 3, 4, segs, 2));
    out.push_back(make(f, "rho=" + kname(), k_, k_, 3, 4, segs, 2));
    if (has_tail()) out.push_back(make(f, "rho=" + kp1(), k_ + 1, k_ + 1, 3, 4, segs));
  }

  std::vector<CodeBranch> b_low(int nu) const {
    const std::string f = "b^nu_rho(nu<=(p-5)/2)";
    const std::vector<Seg> segs{{p_ + 2 * nu - 1, p_ + 2 * nu, 2}};
    std::vector<CodeBranch> out{
        make(f, "rho=1", 1, 1, 1, 4, segs),
        make(f, "rho=2", 2, 2, 3, 4, segs, 2),
        make(f, "3<=rho<=2nu+p-3", 3, 2 * nu + p_ - 3, 3, 4, segs, 2),
        make(f, "rho=2nu+p-2", 2 * nu + p_ - 2, 2 * nu + p_ - 2, 3, 4, segs, 2),
        make(f, "rho=p+2nu+1", p_ + 2 * nu + 1, p_ + 2 * nu + 1, 3, 4, segs, 2),
    };
    out.push_back(make(f, "p+2nu+2<=rho<=" + km1(), p_ + 2 * nu + 2, k_ - 1, 3, 4, segs, 2));
    out.push_back(make(f, "rho=" + kname(), k_, k_, 3, 4, segs, 2));
    if (has_tail()) out.push_back(make(f, "rho=" + kp1(), k_ + 1, k_ + 1, 3, 4, segs));
    return out;
  }

  std::vector<CodeBranch> b_block() const {
    const std::string f = "b^nu_rho(nu=(p-3)/2)";
    // In the q = 2p - 3 table the run 2p-4..q-3 is empty and only q-1 = 2p-4
    // remains, so one range covers both tables.
    const std::vector<Seg> segs{{2 * p_ - 4, k_, 2}};
    std::vector<CodeBranch> out{
        make(f, "rho=1", 1, 1, 1, 4, segs),
        make(f, "rho=2", 2, 2, 3, 4, segs, 2),
        make(f, "3<=rho<=2p-6", 3, 2 * p_ - 6, 3, 4, segs, 2),
        make(f, "rho=2p-5", 2 * p_ - 5, 2 * p_ - 5, 3, 4, segs, 2),
    };
    if (has_tail()) out.push_back(make(f, "rho=q-1", q_ - 1, q_ - 1, 3, 4, segs));
    return out;
  }

  std::vector<CodeBranch> b_top() const {
    const std::string f = "b^nu_rho(nu=(p-1)/2)";
    std::vector<CodeBranch> out{
        make(f, "rho=1", 1, 1, 1, 4),
        make(f, "rho=2", 2, 2, 3, 4, {}, 2),
    };
    push_tail(out, f, 3, {});
    return out;
  }

  std::vector<CodeBranch> c_one() const {
    const std::string f = "c^1_rho";
    const std::vector<Seg> segs{{2, 3, 2}};
    std::vector<CodeBranch> out{
        make(f, "rho=1", 1, 1, 1, 4, segs),
        make(f, "rho=4", 4, 4, 3, 4, segs, 2),
    };
    push_tail(out, f, 5, segs);
    return out;
  }

  std::vector<CodeBranch> c_two() const {
    const std::string f = "c^2_rho";
    const std::vector<Seg> segs{{4, 5, 2}};
    std::vector<CodeBranch> out{
        make(f, "rho=1", 1, 1, 1, 4, segs),
        make(f, "rho=2", 2, 2, 3, 4, segs, 2),
        make(f, "rho=3", 3, 3, 3, 4, segs, 2),
        make(f, "rho=6", 6, 6, 3, 4, segs, 2),
    };
    push_tail(out, f, 7, segs);
    return out;
  }

  std::vector<CodeBranch> c_high(int nu) const {
    const std::string f = "c^nu_rho(nu>=3)";
    const std::vector<Seg> segs{{2 * nu, 2 * nu + 1, 2}};
    std::vector<CodeBranch> out{
        make(f, "rho=1", 1, 1, 1, 4, segs),
        make(f, "rho=2", 2, 2, 3, 4, segs, 2),
        make(f, "3<=rho<=2nu-2", 3, 2 * nu - 2, 3, 4, segs, 2),
        make(f, "rho=2nu-1", 2 * nu - 1, 2 * nu - 1, 3, 4, segs, 2),
        make(f, "rho=2nu+2", 2 * nu + 2, 2 * nu + 2, 3, 4, segs, 2),
    };
    push_tail(out, f, 2 * nu + 3, segs);
    return out;
  }

  Regime regime_;
  int p_;
  int q_;
  int k_ = 0;
};

}  // namespace

std::vector<CodeBranch> code_branches(std::uint64_t p, std::uint64_t q, const BsLabel& label) {
  return Tables(p, q).branches(label);
}

PredictedCode predicted_code(std::uint64_t p, std::uint64_t q, const BsLabel& label) {
  const Tables tables(p, q);
  const BsPartition part(p, q);
  part.find(label);  // rejects labels outside the partition

  const auto landmarks = paper_resolving_labels(p, q);
  if (std::find(landmarks.begin(), landmarks.end(), label) != landmarks.end()) {
    return {std::nullopt, "landmark", std::nullopt};
  }
  for (const auto& branch : tables.branches(label)) {
    if (branch.matches(label.index)) {
      return {branch.code(label.index, static_cast<std::size_t>(tables.k())), branch.name,
              branch.flag};
    }
  }
  return {std::nullopt, "uncovered", std::nullopt};
}

}  // namespace zdmd
