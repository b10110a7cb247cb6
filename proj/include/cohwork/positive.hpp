#pragma once

#include "arch.hpp"
#include "cochain.hpp"

#include <random>
#include <string>
#include <vector>

namespace cohwork {

enum class PlaceKind { finite, real, complex };

struct Place {
  std::string label;
  SubgroupData sub;
  PlaceKind kind;
};

// Desk-scale stand-in for a global field with a marked place set: one
// finite group with a decorated list of decomposition subgroups.  Real
// places carry order-2 subgroups, complex places the trivial one; finite
// places are arbitrary.
class GlobalSetup {
public:
  GlobalSetup(FinGroup g, Character chi, GModule m, int twist,
              std::vector<Place> places, int window = 4);

  const FinGroup &group() const { return g_; }
  const Character &chi() const { return chi_; }
  const GModule &coeff() const { return m_; }
  int twist_power() const { return twist_; }
  const std::vector<Place> &places() const { return places_; }
  int window() const { return window_; }
  const Ring &ring() const { return m_.base().ring(); }

  std::vector<int> finite_index() const;
  std::vector<int> arch_index() const;
  bool has_arch() const { return !arch_index().empty(); }
  // The two-periodic handle for an archimedean entry of places().
  ArchPlace arch_place(int place_index) const;
  std::string describe() const;

private:
  FinGroup g_;
  Character chi_;
  GModule m_;
  int twist_;
  std::vector<Place> places_;
  int window_;
};

// Everything downstream of one setup: local cochain complexes, the
// restriction / projection / comparison maps between them, and their
// composites.  Built once, then reused by the kernel extractors.
struct LocalizationBundle {
  Complex cm;    // C(G, M)
  Complex cf;    // finite places, plain cochains, in place order
  Complex cinf;  // archimedean places, plain cochains
  Complex chat;  // archimedean places, complete complexes
  Complex cs;    // cf ++ cinf
  Complex cshat; // cf ++ chat
  Complex cind;  // one induced-coefficient complex per archimedean place

  ChainMap res_s;    // cm -> cs, all restrictions
  ChainMap pi_inf;   // cs -> cinf
  ChainMap tau_inf;  // cinf -> chat
  ChainMap res_hat;  // cm -> cshat, completed at infinity
  ChainMap pi_hat;   // cshat -> chat
  ChainMap unit_map; // cm -> cind, adjunction units on coefficients
  ChainMap sh_inf;   // cind -> cinf, Shapiro evaluations
  ChainMap loc;      // pi_inf . res_s, equal to sh_inf . unit_map
  ChainMap loc_hat;  // pi_hat . res_hat, equal to tau_inf . loc
};

LocalizationBundle build_localization(const GlobalSetup &s);

// M_+ = coker(M -> sum over archimedean places of Ind M) with the
// inherited action.  With no archimedean places everything collapses to
// zero; no_arch flags that and exact reports it honestly.
struct MPlusData {
  GModule plus;
  GModule ind_sum;
  ModHom unit; // M -> ind_sum
  ModHom proj; // ind_sum -> plus
  bool no_arch = false;
  CheckReport exact; // 0 -> M -> ind_sum -> plus -> 0
};

MPlusData m_plus(const GlobalSetup &s);

enum class HPlusMode { definition, cone };
// Totally positive cohomology in degree n, 1 <= n <= window - 1: either
// H^{n-1}(G, M_+) or H^{n-1} of the cone over the Shapiro-unit composite.
FinMod h_plus(const GlobalSetup &s, int n, HPlusMode mode);

enum class ShaVariant { plain, plus };
// Kernel of localization at the finite places, from H^n(G, M) (plain) or
// from the totally positive H^n (plus).  1 <= n <= window - 2.
FinMod sha(const GlobalSetup &s, int n, ShaVariant variant);
// The completed variant of sha(s, 1, plus), built from the hat cones.
FinMod sha_hat_plus(const GlobalSetup &s);

// Kernel of H^0(Cone(loc)) -> H^0(Cone(loc_hat)), as an abstract module.
FinMod z_direct(const GlobalSetup &s);
// The closed form: A / (A meet B) with A the blockwise norm image inside
// one copy of M per archimedean place and B the diagonal invariants.
FinMod z_formula(const GlobalSetup &s);

// Checks, on one setup: the kernel sequence through z/sha+/sha-hat+, the
// five-term exactness of the localization triangle in low degrees, and
// the cone identifications behind both.  Failures name the spot.
CheckReport verify_paper_sequences(const GlobalSetup &s);

// Symbolic Z for the twist family over the full dyadic ring: r real and
// s complex places, twist i.  Each summand of the answer is 2^a Z_2,
// recorded by the valuation a.  strict = false quotes the closed-form
// table; strict = true recomputes the intersection honestly and flags a
// deviation at i = 0 with more than one place.
struct ZProDescriptor {
  std::vector<int> vals;
  bool strict = false;
  bool deviates = false;
  std::string note;
};
ZProDescriptor twist_z_pro(int i, int r, int s, bool strict);
std::string z_pro_render(const std::vector<int> &vals);

namespace gen {
// Random setup under a size budget: (|G| - 1)^window times the total
// coefficient rank (M plus its induced images at archimedean places)
// stays at or below budget.  Always yields at least one archimedean
// place; window is fixed at 4.
GlobalSetup random_setup(std::mt19937 &rng, const Ring &R,
                         long long budget = 3000);
} // namespace gen

} // namespace cohwork
