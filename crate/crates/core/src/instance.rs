//! Instances of the weighted minimum constrained cost homomorphism problem.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Non-negative cost per target vertex. Costs depend only on the image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostFunction(Vec<u64>);

impl CostFunction {
    pub fn new(costs: Vec<u64>, h: &Graph) -> Result<Self> {
        if costs.len() != h.n() {
            return Err(Error::Length {
                field: "costs",
                expected: h.n(),
                found: costs.len(),
            });
        }
        Ok(CostFunction(costs))
    }

    pub fn zero(h: &Graph) -> Self {
        CostFunction(vec![0; h.n()])
    }

    pub fn get(&self, h: usize) -> u64 {
        self.0[h]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

/// Positive weight per input vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction(Vec<u64>);

impl WeightFunction {
    pub fn new(weights: Vec<u64>, g: &Graph) -> Result<Self> {
        if weights.len() != g.n() {
            return Err(Error::Length {
                field: "weights",
                expected: g.n(),
                found: weights.len(),
            });
        }
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeight(v));
        }
        Ok(WeightFunction(weights))
    }

    pub fn ones(g: &Graph) -> Self {
        WeightFunction(vec![1; g.n()])
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&w| w == 1)
    }
}

/// `(G, H, c, w, budget)`; with unit weights this is the plain constrained-cost problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedInstance {
    pub g: Graph,
    pub h: Graph,
    pub cost: CostFunction,
    pub weight: WeightFunction,
    pub budget: Option<u64>,
}

impl WeightedInstance {
    pub fn new(
        g: Graph,
        h: Graph,
        costs: Vec<u64>,
        weights: Option<Vec<u64>>,
        budget: Option<u64>,
    ) -> Result<Self> {
        let cost = CostFunction::new(costs, &h)?;
        let weight = match weights {
            Some(w) => WeightFunction::new(w, &g)?,
            None => WeightFunction::ones(&g),
        };
        Ok(WeightedInstance {
            g,
            h,
            cost,
            weight,
            budget,
        })
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    /// `w(v) * c(h)` with overflow checking.
    pub fn unit_cost(&self, v: usize, h: usize) -> Result<u64> {
        self.weight
            .get(v)
            .checked_mul(self.cost.get(h))
            .ok_or(Error::Overflow("vertex cost"))
    }

    /// Weighted cost of an arbitrary total map (edges not checked).
    pub fn map_cost(&self, map: &[usize]) -> Result<u64> {
        map.iter().enumerate().try_fold(0u64, |acc, (v, &h)| {
            acc.checked_add(self.unit_cost(v, h)?)
                .ok_or(Error::Overflow("homomorphism cost"))
        })
    }
}

/// A validated homomorphism together with its weighted cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub map: Vec<usize>,
    pub cost: u64,
}

/// Checks that `map` is a homomorphism `G -> H` and computes its cost.
pub fn validate_hom(inst: &WeightedInstance, map: &[usize]) -> Result<Homomorphism> {
    check_edges(&inst.g, &inst.h, map)?;
    Ok(Homomorphism {
        map: map.to_vec(),
        cost: inst.map_cost(map)?,
    })
}

/// Edge-preservation check shared by every solver.
pub fn check_edges(g: &Graph, h: &Graph, map: &[usize]) -> Result<()> {
    if map.len() != g.n() {
        return Err(Error::Length {
            field: "map",
            expected: g.n(),
            found: map.len(),
        });
    }
    if let Some((vertex, &image)) = map.iter().enumerate().find(|(_, &x)| x >= h.n()) {
        return Err(Error::ImageOutOfRange { vertex, image });
    }
    for &(u, v) in g.edges() {
        if !h.has_edge(map[u], map[v]) {
            return Err(Error::NotAnEdge {
                u,
                v,
                fu: map[u],
                fv: map[v],
            });
        }
    }
    Ok(())
}

/// Partial assignment of input vertices to target vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Precolouring {
    assignments: BTreeMap<usize, usize>,
}

impl Precolouring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(usize, usize)], g: &Graph, h: &Graph) -> Result<Self> {
        let mut pre = Precolouring::new();
        for &(v, x) in pairs {
            if v >= g.n() {
                return Err(Error::Precondition(format!(
                    "precoloured vertex {v} is not a vertex of G"
                )));
            }
            if x >= h.n() {
                return Err(Error::ImageOutOfRange { vertex: v, image: x });
            }
            if pre.assignments.insert(v, x).is_some() {
                return Err(Error::Precondition(format!("vertex {v} precoloured twice")));
            }
        }
        Ok(pre)
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.assignments.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignments.iter().map(|(&v, &x)| (v, x))
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_inst(costs: Vec<u64>) -> WeightedInstance {
        WeightedInstance::new(Graph::path(2), Graph::path(2), costs, None, None).unwrap()
    }

    #[test]
    fn k2_forced_cost() {
        let hom = validate_hom(&k2_inst(vec![1, 2]), &[0, 1]).unwrap();
        assert_eq!(hom.cost, 3);
    }

    #[test]
    fn hexagon_identity_cost() {
        let n = 2u64;
        let c = vec![0, 36 * n * n, 1, 0, 36 * n * n, 6 * n];
        assert_eq!(c, vec![0, 144, 1, 0, 144, 12]);
        let inst =
            WeightedInstance::new(Graph::cycle(6), Graph::cycle(6), c, None, None).unwrap();
        let hom = validate_hom(&inst, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(hom.cost, 301);
    }

    #[test]
    fn rejects_non_edge_images() {
        let inst =
            WeightedInstance::new(Graph::path(2), Graph::path(3), vec![0; 3], None, None).unwrap();
        assert!(matches!(
            validate_hom(&inst, &[0, 2]),
            Err(Error::NotAnEdge { .. })
        ));
        // both ends on one vertex: H has no loops
        assert!(validate_hom(&inst, &[1, 1]).is_err());
        assert!(matches!(
            validate_hom(&inst, &[0, 7]),
            Err(Error::ImageOutOfRange { .. })
        ));
    }

    #[test]
    fn validates_lengths_and_weights() {
        let g = Graph::path(2);
        let h = Graph::path(2);
        assert!(matches!(
            WeightedInstance::new(g.clone(), h.clone(), vec![1], None, None),
            Err(Error::Length { field: "costs", .. })
        ));
        assert!(matches!(
            WeightedInstance::new(g.clone(), h.clone(), vec![1, 1], Some(vec![1, 1, 1]), None),
            Err(Error::Length { field: "weights", .. })
        ));
        assert_eq!(
            WeightedInstance::new(g, h, vec![1, 1], Some(vec![1, 0]), None),
            Err(Error::ZeroWeight(1))
        );
    }

    #[test]
    fn overflow_aborts() {
        let inst = WeightedInstance::new(
            Graph::path(2),
            Graph::path(2),
            vec![u64::MAX / 2, u64::MAX / 2],
            Some(vec![3, 1]),
            None,
        )
        .unwrap();
        assert!(matches!(validate_hom(&inst, &[0, 1]), Err(Error::Overflow(_))));
    }
}
