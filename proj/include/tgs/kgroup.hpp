#ifndef TGS_KGROUP_HPP
#define TGS_KGROUP_HPP

#include <string>
#include <vector>

#include "tgs/structure.hpp"
#include "tgs/subgroup_ops.hpp"

namespace tgs {

enum class ProofTag { SN, KCIRC, TI, R2, NNC, AUTOCENT, BFS_EXACT, UNDETERMINED };

const char* tag_name(ProofTag tag);
ProofTag tag_from_name(const std::string& name);

enum class ResolveMode { automatic, criteria_only, bfs };

struct KReport {
  std::string group_name;
  unsigned prime = 0;
  unsigned long long group_order = 0;
  unsigned long long sylow_order = 0;
  unsigned long long normalizer_order = 0;
  unsigned long long k_circle_order = 0;
  bool k_determined = false;
  unsigned long long k_order = 0;                // meaningful when determined
  unsigned long long k_lower = 0, k_upper = 0;   // bracket otherwise
  ProofTag tag = ProofTag::UNDETERMINED;
  std::vector<unsigned long long> t_invariants;  // of (N/K)^ab when determined
  std::vector<std::string> failed_criteria;
  double elapsed_ms = 0;
};

// Everything the criteria ladder and the exact closure share: Sylow subgroup,
// its normalizer, the lattice of subgroups of S split into N_G(S)-classes,
// and per class representative Q the groups N_G(Q) and O^{p'}(N_G(Q)).
struct KPipeline {
  Group g;
  unsigned prime;
  Caps caps;
  Group s;
  Group n;
  bool have_classes = false;
  SubgroupClassList classes;
  std::vector<Group> rep_normalizers;
  std::vector<Group> rep_residuals;
};

KPipeline make_pipeline(const Group& g, unsigned p, const Caps& caps = {});

// K_G degree-one part: the normal closure in N_G(S) of the subgroups
// N_G(S) cap O^{p'}(N_G(Q)), one Q per N_G(S)-class of nontrivial Q <= S.
Group k_circle(const KPipeline& pipe);

// Exact K_G: all g in N_G(S) reachable by a chain of moves x_i in
// O^{p'}(N_G(Q_i)) that drags some nontrivial witness y through consecutive
// subgroups of S.  Chains through a fixed Q compose, so generator-level moves
// suffice; the walk is resolved with a spanning transversal per connected
// witness component and a vertex group grown from its Schreier generators.
// The accepted set is verified to be a subgroup before returning.
Group chain_closure_k(const KPipeline& pipe);

struct ResolveResult {
  bool determined = false;
  Group k;                   // determined: K itself; else K° as the lower end
  ProofTag tag = ProofTag::UNDETERMINED;
  std::vector<std::string> failed_criteria;
};

// The criteria ladder: SN, KCIRC, TI, R2, NNC, then exact closure when the
// mode and caps allow, else an undetermined bracket.
ResolveResult resolve_k(const KPipeline& pipe, ResolveMode mode);

// Membership certificate: g in N_G(S) lies in K_G° whenever
// C_S(g) meets the G-conjugacy class of a witness z with
// O^{p'}(C_G(z)) = C_G(z).  The witness property is verified and a violation
// throws.
bool autocent_filter(const Group& g, const Group& s, unsigned p,
                     const Perm& x, const std::vector<Perm>& witnesses,
                     const Caps& caps = {});

KReport t_group_report(const Group& g, unsigned p, const std::string& name,
                       ResolveMode mode = ResolveMode::automatic,
                       const Caps& caps = {});

}  // namespace tgs

#endif
