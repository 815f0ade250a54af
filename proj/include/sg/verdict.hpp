// Tied/untied outcomes and the certificate records that back them.
#pragma once

#include <variant>

#include "sg/balance.hpp"
#include "sg/core.hpp"

namespace sg {

enum class VerdictKind { Tied, Untied, TiedVacuous };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Tied: return "tied";
        case VerdictKind::Untied: return "untied";
        case VerdictKind::TiedVacuous: return "tied_vacuous";
    }
    return "?";
}

/// How a split across a 2-separation {u, v} was resolved.
enum class SplitPart {
    Separated = 1,       // e1, e2 on different sides; both sides get a positive marker
    BalancedSide = 2,    // other side balanced; replaced by one marker of its u-v path sign
    UnbalancedSide = 3,  // other side unbalanced; replaced by a +/- marker pair
};

// Per-node records. Edge and vertex ids refer to the node's core graph: the node's
// problem graph with edges parallel to the distinguished pair removed, restricted
// to the block containing both, vertices renumbered in increasing order.

struct ParallelPairRecord {};  // distinguished edges parallel: the only common cycle is the 2-cycle
struct VacuousRecord {};       // distinguished edges in different blocks
struct SmallLeafRecord {};     // decided by exhaustive enumeration

/// Parallel class F with both signs, F + {e1, e2} = cut(cut_side), and the graph
/// minus those edges balanced under `signing`.
struct ParallelCutRecord {
    std::vector<EdgeId> parallel_class;
    std::vector<VertexId> cut_side;
    VertexSigning signing;
};

/// e1, e2 share `vertex`; `signing` realizes core - vertex (vertex ids of that graph).
struct CommonVertexRecord {
    VertexId vertex;
    VertexSigning signing;
};

/// `signing` realizes core - {e1, e2}.
struct BalancedRemainderRecord {
    VertexSigning signing;
};

struct CertificateNode;

/// `side` is the edge set of one component of core - {u, v} with its edges to u, v;
/// "rest" is the complement. For part 2 and 3, `replace_side` says which of the two
/// was replaced; `side_signing` (part 2 only) realizes the replaced subgraph, whose
/// vertices are numbered in increasing core order.
struct SplitSpec {
    SplitPart part = SplitPart::Separated;
    VertexId u;
    VertexId v;
    std::vector<EdgeId> side;
    bool replace_side = false;
    std::optional<VertexSigning> side_signing;
};

struct SplitRecord {
    SplitSpec spec;
    std::vector<CertificateNode> children;
};

struct CertificateNode {
    std::variant<ParallelPairRecord, VacuousRecord, SmallLeafRecord, ParallelCutRecord, CommonVertexRecord,
                 BalancedRemainderRecord, SplitRecord>
        body;
};

struct Witness {
    Cycle positive;
    Cycle negative;
};

struct Verdict {
    VerdictKind kind = VerdictKind::TiedVacuous;
    std::optional<Sign> common_sign;
    std::optional<Witness> witness;              // untied
    std::optional<CertificateNode> certificate;  // tied / tied_vacuous
    bool witness_exhausted = false;              // untied, but the witness search ran out of budget

    bool tied() const noexcept { return kind != VerdictKind::Untied; }
};

}  // namespace sg
