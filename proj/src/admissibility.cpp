#include "fourfold/admissibility.hpp"

#include <algorithm>

namespace fourfold {

BFVerdict check_bf(const ManifoldDescriptor& d) {
  BFVerdict out;

  if (const Certificate* c = d.find_certificate(CertificateKind::SWOddCanonical)) {
    out.cond1 = Verdict::holds("certified: " + c->provenance);
  } else {
    out.cond1 = Verdict::undetermined("no odd-SW certificate for a canonical-type class");
  }

  if (!d.b1.is_known()) {
    out.cond2 = Verdict::undetermined("b1 unknown: b+ - b1 congruence not computable");
  } else {
    BettiData betti;
    bool derived = false;
    try {
      betti = derive_betti(d);
      derived = true;
    } catch (const Error& e) {
      out.cond2 = Verdict::undetermined(std::string("descriptor inconsistent: ") + e.what());
    }
    if (derived) {
      const std::int64_t diff = betti.b_plus - d.b1.value();
      if (betti.b_plus <= 1) {
        out.cond2 = Verdict::fails("b+ = " + std::to_string(betti.b_plus) + " is not > 1");
      } else if (((diff % 4) + 4) % 4 != 3) {
        out.cond2 = Verdict::fails("b+ - b1 = " + std::to_string(diff) + " !== 3 (mod 4)");
      } else {
        out.cond2 = Verdict::holds("b+ = " + std::to_string(betti.b_plus) +
                                   " > 1 and b+ - b1 = " + std::to_string(diff) + " == 3 (mod 4)");
      }
    }
  }

  if (d.b1.is_known() && d.b1.value() == 0) {
    out.cond3 = Verdict::holds("b1 = 0: the pairing condition holds vacuously");
  } else if (const Certificate* c = d.find_certificate(CertificateKind::SijEven)) {
    out.cond3 = Verdict::holds("certified: " + c->provenance);
  } else {
    out.cond3 = Verdict::undetermined("no evenness certificate for the S^ij pairings");
  }

  const auto conds = {&out.cond1, &out.cond2, &out.cond3};
  if (std::any_of(conds.begin(), conds.end(), [](const Verdict* v) { return v->is_fails(); })) {
    out.overall = Verdict::fails("an admissibility axiom fails");
  } else if (std::all_of(conds.begin(), conds.end(),
                         [](const Verdict* v) { return v->is_holds(); })) {
    out.overall = Verdict::holds("all three admissibility axioms hold");
  } else {
    out.overall = Verdict::undetermined("at least one axiom is uncertified");
  }
  return out;
}

}  // namespace fourfold
