//! Recognition of the graph classes in the complexity dichotomy and the
//! target classifier built on top of them.

mod cycles;
mod ordering;
mod patterns;

use std::fmt;

pub use cycles::{find_long_induced_cycle, induced_cycle_of_length, is_induced_cycle};
pub use ordering::{find_min_max_ordering, MinMaxOrdering, DEFAULT_ORDERING_CAP};
pub use patterns::{
    builtin_pattern, embed_pattern, role_names, PatternEmbedding, PatternKind, CLAW_EDGES,
    NET_EDGES, TENT_EDGES,
};

use crate::graph::{bipartition, odd_cycle, Bipartition, Graph};

/// Evidence attached to a recognition answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Bipartition(Bipartition),
    Ordering(MinMaxOrdering),
    Pattern(PatternEmbedding),
    /// Induced cycle of length at least six.
    InducedCycle(Vec<usize>),
    OddCycle(Vec<usize>),
}

impl Certificate {
    /// Re-checks the certificate against `h`.
    pub fn is_valid_for(&self, h: &Graph) -> bool {
        match self {
            Certificate::Bipartition(b) => b.is_proper_for(h),
            Certificate::Ordering(o) => o.is_valid_for(h),
            Certificate::Pattern(p) => p.is_valid_in(h),
            Certificate::InducedCycle(c) => c.len() >= 6 && is_induced_cycle(h, c),
            Certificate::OddCycle(c) => {
                c.len() % 2 == 1
                    && (0..c.len()).all(|i| h.has_edge(c[i], c[(i + 1) % c.len()]))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub member: bool,
    pub certificate: Certificate,
}

/// Bipartite with no induced cycle of length at least six.
pub fn is_chordal_bipartite(h: &Graph) -> Recognition {
    let Some(parts) = bipartition(h) else {
        let cycle = odd_cycle(h).expect("non-bipartite graph has an odd cycle");
        return Recognition {
            member: false,
            certificate: Certificate::OddCycle(cycle),
        };
    };
    match find_long_induced_cycle(h, 6) {
        Some(cycle) => Recognition {
            member: false,
            certificate: Certificate::InducedCycle(cycle),
        },
        None => Recognition {
            member: true,
            certificate: Certificate::Bipartition(parts),
        },
    }
}

/// Chordal bipartite and free of the bipartite claw, net and tent.
///
/// On success the certificate is a min-max ordering when the exhaustive
/// search fits under [`DEFAULT_ORDERING_CAP`], otherwise the bipartition.
pub fn is_proper_interval_bigraph(h: &Graph) -> Recognition {
    let chordal = is_chordal_bipartite(h);
    if !chordal.member {
        return chordal;
    }
    if let Some(emb) = forbidden_pattern(h) {
        return Recognition {
            member: false,
            certificate: Certificate::Pattern(emb),
        };
    }
    let certificate = match find_min_max_ordering(h, DEFAULT_ORDERING_CAP) {
        Ok(Some(ord)) => Certificate::Ordering(ord),
        _ => chordal.certificate,
    };
    Recognition {
        member: true,
        certificate,
    }
}

fn forbidden_pattern(h: &Graph) -> Option<PatternEmbedding> {
    [
        PatternKind::BipartiteClaw,
        PatternKind::BipartiteNet,
        PatternKind::BipartiteTent,
    ]
    .into_iter()
    .find_map(|kind| embed_pattern(h, kind))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    Polynomial,
    NpComplete,
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    ProperIntervalBigraph,
    NotBipartite,
    LongInducedCycle,
    ContainsBipartiteClaw,
    /// Chordal bipartite and claw-free, but contains a bipartite net or tent.
    NetOrTent,
}

impl Reason {
    pub fn explanation(self) -> &'static str {
        match self {
            Reason::ProperIntervalBigraph => {
                "proper interval bigraph: min-cut over a min-max ordering solves it exactly"
            }
            Reason::NotBipartite => {
                "not bipartite: with all costs zero the problem is H-colouring, \
                 NP-complete for every non-bipartite H by the undirected H-colouring dichotomy"
            }
            Reason::LongInducedCycle => {
                "not chordal bipartite: an induced even cycle of length >= 6 \
                 supports the pre-colouring extension gadget reduction"
            }
            Reason::ContainsBipartiteClaw => {
                "contains an induced bipartite claw: reduction from maximum \
                 independent set in 3-partite graphs"
            }
            Reason::NetOrTent => {
                "chordal bipartite and claw-free but contains a bipartite net or \
                 tent: complexity unresolved"
            }
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Reason::ProperIntervalBigraph => "ProperIntervalBigraph",
            Reason::NotBipartite => "NotBipartite",
            Reason::LongInducedCycle => "LongInducedCycle",
            Reason::ContainsBipartiteClaw => "ContainsBipartiteClaw",
            Reason::NetOrTent => "NetOrTent",
        };
        f.write_str(name)
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            VerdictKind::Polynomial => "Polynomial",
            VerdictKind::NpComplete => "NPComplete",
            VerdictKind::Open => "Open",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub reason: Reason,
    pub certificate: Certificate,
}

impl Verdict {
    /// Certificate shape matches the reason and re-validates against `h`.
    pub fn is_consistent_for(&self, h: &Graph) -> bool {
        let shape_ok = matches!(
            (self.reason, &self.certificate),
            (
                Reason::ProperIntervalBigraph,
                Certificate::Ordering(_) | Certificate::Bipartition(_)
            ) | (Reason::NotBipartite, Certificate::OddCycle(_))
                | (Reason::LongInducedCycle, Certificate::InducedCycle(_))
                | (Reason::ContainsBipartiteClaw, Certificate::Pattern(_))
                | (Reason::NetOrTent, Certificate::Pattern(_))
        );
        shape_ok && self.certificate.is_valid_for(h)
    }
}

/// Classifies the complexity of the constrained-cost problem for target `h`.
pub fn classify_target(h: &Graph) -> Verdict {
    let chordal = is_chordal_bipartite(h);
    if !chordal.member {
        let reason = match chordal.certificate {
            Certificate::OddCycle(_) => Reason::NotBipartite,
            _ => Reason::LongInducedCycle,
        };
        return Verdict {
            kind: VerdictKind::NpComplete,
            reason,
            certificate: chordal.certificate,
        };
    }
    if let Some(emb) = embed_pattern(h, PatternKind::BipartiteClaw) {
        return Verdict {
            kind: VerdictKind::NpComplete,
            reason: Reason::ContainsBipartiteClaw,
            certificate: Certificate::Pattern(emb),
        };
    }
    let pib = is_proper_interval_bigraph(h);
    if pib.member {
        Verdict {
            kind: VerdictKind::Polynomial,
            reason: Reason::ProperIntervalBigraph,
            certificate: pib.certificate,
        }
    } else {
        Verdict {
            kind: VerdictKind::Open,
            reason: Reason::NetOrTent,
            certificate: pib.certificate,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordal_bipartite_examples() {
        let k33 = is_chordal_bipartite(&Graph::complete_bipartite(3, 3));
        assert!(k33.member);
        let c6 = is_chordal_bipartite(&Graph::cycle(6));
        assert_eq!(c6.certificate, Certificate::InducedCycle(vec![0, 1, 2, 3, 4, 5]));
        let tri = is_chordal_bipartite(&Graph::cycle(3));
        assert!(!tri.member);
        assert!(matches!(tri.certificate, Certificate::OddCycle(_)));
    }

    #[test]
    fn pib_examples() {
        let p5 = is_proper_interval_bigraph(&Graph::path(5));
        assert!(p5.member);
        assert!(matches!(p5.certificate, Certificate::Ordering(_)));
        let claw = builtin_pattern(PatternKind::BipartiteClaw);
        let r = is_proper_interval_bigraph(&claw);
        assert!(!r.member);
        match r.certificate {
            Certificate::Pattern(p) => {
                assert_eq!(p.kind, PatternKind::BipartiteClaw);
                assert_eq!(p.image, (0..7).collect::<Vec<_>>());
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        assert!(is_proper_interval_bigraph(&Graph::complete_bipartite(3, 3)).member);
    }

    #[test]
    fn classifier_examples() {
        let v = classify_target(&Graph::cycle(6));
        assert_eq!((v.kind, v.reason), (VerdictKind::NpComplete, Reason::LongInducedCycle));
        let net = classify_target(&builtin_pattern(PatternKind::BipartiteNet));
        assert_eq!(net.kind, VerdictKind::Open);
        let tent = classify_target(&builtin_pattern(PatternKind::BipartiteTent));
        assert_eq!(tent.kind, VerdictKind::Open);
        let tri = classify_target(&Graph::cycle(3));
        assert_eq!(tri.reason, Reason::NotBipartite);
        for h in [Graph::cycle(6), Graph::cycle(3), Graph::path(4)] {
            assert!(classify_target(&h).is_consistent_for(&h));
        }
    }
}
