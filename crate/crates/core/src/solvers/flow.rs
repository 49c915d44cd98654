//! Integer max-flow by shortest augmenting paths (Edmonds-Karp).

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
}

/// Directed network. Arcs into the source or out of the sink are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        assert!(source < nodes && sink < nodes && source != sink);
        FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) -> Result<()> {
        if from >= self.nodes || to >= self.nodes {
            return Err(Error::Precondition(format!("arc {from}->{to} out of range")));
        }
        if to == self.source || from == self.sink {
            return Err(Error::Precondition(format!(
                "arc {from}->{to} enters the source or leaves the sink"
            )));
        }
        self.arcs.push(Arc { from, to, capacity });
        Ok(())
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Capacity of the cut whose source side is `side`.
    pub fn cut_capacity(&self, side: &[bool]) -> u128 {
        self.arcs
            .iter()
            .filter(|a| side[a.from] && !side[a.to])
            .map(|a| a.capacity as u128)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: u128,
    /// Nodes reachable from the source in the final residual network.
    pub source_side: Vec<bool>,
}

pub fn max_flow(net: &FlowNetwork) -> MaxFlow {
    // residual arcs in pairs: 2i forward, 2i+1 backward
    let n = net.nodes;
    let mut head = Vec::with_capacity(net.arcs.len() * 2);
    let mut cap: Vec<u128> = Vec::with_capacity(net.arcs.len() * 2);
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in &net.arcs {
        out[a.from].push(head.len());
        head.push(a.to);
        cap.push(a.capacity as u128);
        out[a.to].push(head.len());
        head.push(a.from);
        cap.push(0);
    }
    let mut value = 0u128;
    loop {
        let mut via = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[net.source] = true;
        let mut queue = VecDeque::from([net.source]);
        while let Some(u) = queue.pop_front() {
            if u == net.sink {
                break;
            }
            for &e in &out[u] {
                let v = head[e];
                if !seen[v] && cap[e] > 0 {
                    seen[v] = true;
                    via[v] = e;
                    queue.push_back(v);
                }
            }
        }
        if !seen[net.sink] {
            return MaxFlow {
                value,
                source_side: reachable(net.source, &out, &head, &cap),
            };
        }
        let mut bottleneck = u128::MAX;
        let mut v = net.sink;
        while v != net.source {
            let e = via[v];
            bottleneck = bottleneck.min(cap[e]);
            v = head[e ^ 1];
        }
        let mut v = net.sink;
        while v != net.source {
            let e = via[v];
            cap[e] -= bottleneck;
            cap[e ^ 1] += bottleneck;
            v = head[e ^ 1];
        }
        value += bottleneck;
    }
}

fn reachable(source: usize, out: &[Vec<usize>], head: &[usize], cap: &[u128]) -> Vec<bool> {
    let mut seen = vec![false; out.len()];
    seen[source] = true;
    let mut stack = vec![source];
    while let Some(u) = stack.pop() {
        for &e in &out[u] {
            if cap[e] > 0 && !seen[head[e]] {
                seen[head[e]] = true;
                stack.push(head[e]);
            }
        }
    }
    seen
}
