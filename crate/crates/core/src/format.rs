//! Plain-text instance documents (TOML).
//!
//! ```toml
//! costs = [1, 2]
//! weights = [1, 1]          # optional, defaults to all ones
//! budget = 3                # optional
//! precolouring = [[0, 0]]   # optional, pairs [vertex of G, vertex of H]
//! mis_parts = [[0], [1]]    # optional, up to three parts for a 3-partite seed
//! k = 1                     # optional, independent set target
//!
//! [g]
//! n = 2
//! edges = [[0, 1]]
//!
//! [h]
//! n = 2
//! edges = [[0, 1]]
//!
//! [names]                   # optional symbolic vertex names
//! g = ["u", "v"]
//!
//! [embedding]               # optional pattern embedding into H
//! kind = "claw"             # hexagon | cycle | claw | net | tent
//! image = [0, 1, 2, 3, 4, 5, 6]
//! ```
//!
//! Unknown keys are rejected. Serializing a parsed document reproduces the
//! canonical text exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexNames};
use crate::instance::{Precolouring, WeightedInstance};
use crate::recognition::{role_names, PatternEmbedding, PatternKind};
use crate::reductions::ReductionOutput;
use crate::solvers::MisInstance;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamesDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingDoc {
    pub kind: String,
    pub image: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub costs: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precolouring: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mis_parts: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<GraphDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<GraphDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<NamesDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingDoc>,
}

fn field<T: Clone>(value: &Option<T>, name: &str) -> Result<T> {
    value
        .clone()
        .ok_or_else(|| Error::Format(format!("missing field `{name}`")))
}

fn in_field<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Format(format!("field `{name}`: {e}")))
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self, name: &str) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        in_field(name, Graph::new(self.n, &edges))
    }
}

/// Name used for `kind` in documents.
pub fn pattern_kind_name(kind: PatternKind) -> String {
    match kind {
        PatternKind::Hexagon => "hexagon".into(),
        PatternKind::EvenCycle(len) => format!("cycle{len}"),
        PatternKind::BipartiteClaw => "claw".into(),
        PatternKind::BipartiteNet => "net".into(),
        PatternKind::BipartiteTent => "tent".into(),
    }
}

/// Inverse of [`pattern_kind_name`]; `cycle` alone takes its length from the image.
pub fn parse_pattern_kind(name: &str, image_len: usize) -> Result<PatternKind> {
    Ok(match name {
        "hexagon" => PatternKind::Hexagon,
        "claw" => PatternKind::BipartiteClaw,
        "net" => PatternKind::BipartiteNet,
        "tent" => PatternKind::BipartiteTent,
        "cycle" => PatternKind::EvenCycle(image_len),
        other => match other.strip_prefix("cycle").and_then(|s| s.parse().ok()) {
            Some(len) => PatternKind::EvenCycle(len),
            None => return Err(Error::Format(format!("field `embedding.kind`: unknown pattern `{other}`"))),
        },
    })
}

impl InstanceDocument {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Format(e.to_string().trim_end().to_string()))
    }

    pub fn to_text(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn from_instance(inst: &WeightedInstance) -> Self {
        InstanceDocument {
            costs: Some(inst.cost.as_slice().to_vec()),
            weights: (!inst.weight.is_unit()).then(|| inst.weight.as_slice().to_vec()),
            budget: inst.budget,
            g: Some(GraphDoc::from_graph(&inst.g)),
            h: Some(GraphDoc::from_graph(&inst.h)),
            ..Default::default()
        }
    }

    /// Reduced instance with gadget names and the embedding used in `H`.
    pub fn from_reduction(out: &ReductionOutput) -> Self {
        let mut doc = Self::from_instance(&out.instance);
        doc.names = Some(NamesDoc {
            g: Some(out.names.names().to_vec()),
            h: None,
        });
        doc.embedding = Some(EmbeddingDoc {
            kind: pattern_kind_name(out.embedding.kind),
            image: out.embedding.image.clone(),
        });
        doc
    }

    pub fn from_mis(mis: &MisInstance) -> Self {
        InstanceDocument {
            mis_parts: Some(mis.parts.to_vec()),
            k: Some(mis.k),
            g: Some(GraphDoc::from_graph(&mis.g)),
            ..Default::default()
        }
    }

    pub fn graph_g(&self) -> Result<Graph> {
        field(&self.g, "g")?.to_graph("g")
    }

    pub fn graph_h(&self) -> Result<Graph> {
        field(&self.h, "h")?.to_graph("h")
    }

    pub fn weighted_instance(&self) -> Result<WeightedInstance> {
        let g = self.graph_g()?;
        let h = self.graph_h()?;
        let costs = field(&self.costs, "costs")?;
        WeightedInstance::new(g, h, costs, self.weights.clone(), self.budget)
    }

    pub fn precolouring(&self, g: &Graph, h: &Graph) -> Result<Precolouring> {
        let pairs: Vec<(usize, usize)> = self
            .precolouring
            .iter()
            .flatten()
            .map(|&[v, x]| (v, x))
            .collect();
        in_field("precolouring", Precolouring::from_pairs(&pairs, g, h))
    }

    /// 3-partite seed; `k` overrides the document's `k`.
    pub fn mis_instance(&self, k: Option<usize>) -> Result<MisInstance> {
        let g = self.graph_g()?;
        let parts = field(&self.mis_parts, "mis_parts")?;
        if parts.len() > 3 {
            return Err(Error::Format(format!(
                "field `mis_parts`: expected at most 3 parts, found {}",
                parts.len()
            )));
        }
        let mut three: [Vec<usize>; 3] = Default::default();
        for (slot, part) in three.iter_mut().zip(parts) {
            *slot = part;
        }
        let k = match k {
            Some(k) => k,
            None => field(&self.k, "k")?,
        };
        in_field("mis_parts", MisInstance::new(g, three, k))
    }

    pub fn names_g(&self) -> Result<Option<VertexNames>> {
        self.names_for(|n| n.g.as_ref(), "names.g", self.g.as_ref().map(|g| g.n))
    }

    pub fn names_h(&self) -> Result<Option<VertexNames>> {
        self.names_for(|n| n.h.as_ref(), "names.h", self.h.as_ref().map(|g| g.n))
    }

    fn names_for(
        &self,
        pick: impl Fn(&NamesDoc) -> Option<&Vec<String>>,
        name: &'static str,
        expected: Option<usize>,
    ) -> Result<Option<VertexNames>> {
        let Some(list) = self.names.as_ref().and_then(pick) else {
            return Ok(None);
        };
        if let Some(n) = expected {
            if list.len() != n {
                return Err(Error::Length {
                    field: name,
                    expected: n,
                    found: list.len(),
                });
            }
        }
        in_field(name, VertexNames::from_names(list.clone())).map(Some)
    }

    /// The embedding stored in the document, re-checked against `h`.
    pub fn embedding(&self, h: &Graph) -> Result<Option<PatternEmbedding>> {
        let Some(doc) = &self.embedding else {
            return Ok(None);
        };
        let kind = parse_pattern_kind(&doc.kind, doc.image.len())?;
        if let PatternKind::EvenCycle(len) = kind {
            if len < 4 || len % 2 != 0 {
                return Err(Error::Format(format!("field `embedding.kind`: bad cycle length {len}")));
            }
        }
        let emb = PatternEmbedding {
            kind,
            image: doc.image.clone(),
            roles: role_names(kind),
        };
        if !emb.is_valid_in(h) {
            return Err(Error::Format("field `embedding`: not an induced copy in h".into()));
        }
        Ok(Some(emb))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const K2: &str = "costs = [1, 2]\n\n[g]\nn = 2\nedges = [[0, 1]]\n\n[h]\nn = 2\nedges = [[0, 1]]\n";

    #[test]
    fn minimal_document() {
        let doc = InstanceDocument::parse(K2).unwrap();
        let inst = doc.weighted_instance().unwrap();
        assert!(inst.weight.is_unit());
        assert_eq!(inst.budget, None);
        assert_eq!(doc.to_text().unwrap(), K2);
    }

    #[test]
    fn errors_name_the_field() {
        let text = format!("weights = [1]\n{K2}");
        let err = InstanceDocument::parse(&text).unwrap().weighted_instance().unwrap_err();
        assert!(err.to_string().contains("weights"), "{err}");
        let err = InstanceDocument::parse("costs = [1]\n[g]\nn = 1\nedges = [[0, 0]]\n")
            .unwrap()
            .graph_g()
            .unwrap_err();
        assert!(err.to_string().contains("`g`"), "{err}");
        let err = InstanceDocument::parse("cost = [1]").unwrap_err();
        assert!(err.to_string().contains("cost"), "{err}");
        let err = InstanceDocument::parse("[g]\nn = 2\n").unwrap().weighted_instance().unwrap_err();
        assert!(err.to_string().contains("`h`"), "{err}");
    }

    #[test]
    fn syntax_errors_carry_a_line() {
        let err = InstanceDocument::parse("costs = [1, 2]\n[g\nn = 2\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn mis_document() {
        let text = "mis_parts = [[0], [1], [2]]\nk = 2\n\n[g]\nn = 3\nedges = [[0, 1]]\n";
        let doc = InstanceDocument::parse(text).unwrap();
        let mis = doc.mis_instance(None).unwrap();
        assert_eq!(mis.k, 2);
        assert_eq!(doc.mis_instance(Some(1)).unwrap().k, 1);
        assert_eq!(InstanceDocument::from_mis(&mis).to_text().unwrap(), text);
    }

    #[test]
    fn pattern_names_round_trip() {
        for kind in [
            PatternKind::Hexagon,
            PatternKind::EvenCycle(8),
            PatternKind::BipartiteClaw,
            PatternKind::BipartiteNet,
            PatternKind::BipartiteTent,
        ] {
            assert_eq!(parse_pattern_kind(&pattern_kind_name(kind), 0).unwrap(), kind);
        }
    }
}
