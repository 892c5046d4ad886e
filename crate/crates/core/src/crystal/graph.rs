use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde_json::{json, Value};

use super::{Crystal, WeightPolynomial};
use crate::weyl::Node;

/// A finite piece of a crystal graph generated from its highest weight vertex.
#[derive(Clone, Debug)]
pub struct CrystalGraph<V> {
    pub vertices: Vec<V>,
    /// Arrows `(source, i, target)` as vertex indices.
    pub arrows: Vec<(usize, Node, usize)>,
    /// Number of lowering steps from the highest weight vertex.
    pub depth: Vec<usize>,
    index: HashMap<V, usize>,
}

impl<V: Clone + Eq + std::hash::Hash> CrystalGraph<V> {
    /// Breadth-first generation by `f̃_i`; vertices deeper than `depth_bound` are
    /// dropped together with the arrows leading to them.
    pub fn generate<C: Crystal<Vertex = V>>(c: &C, hw: &V, depth_bound: Option<usize>) -> Self {
        let mut g = CrystalGraph {
            vertices: vec![hw.clone()],
            arrows: Vec::new(),
            depth: vec![0],
            index: HashMap::from([(hw.clone(), 0)]),
        };
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            let dk = g.depth[k];
            if depth_bound.is_some_and(|n| dk >= n) {
                continue;
            }
            let b = g.vertices[k].clone();
            for &i in c.datum().nodes() {
                if let Some(nb) = c.f(i, &b) {
                    let t = match g.index.get(&nb) {
                        Some(&t) => t,
                        None => {
                            let t = g.vertices.len();
                            g.index.insert(nb.clone(), t);
                            g.vertices.push(nb);
                            g.depth.push(dk + 1);
                            queue.push_back(t);
                            t
                        }
                    };
                    g.arrows.push((k, i, t));
                }
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &V) -> bool {
        self.index.contains_key(v)
    }

    /// Vertices with no incoming arrow.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.len()];
        for &(_, _, t) in &self.arrows {
            has_in[t] = true;
        }
        (0..self.len()).filter(|&k| !has_in[k]).collect()
    }

    pub fn character<C: Crystal<Vertex = V>>(&self, c: &C) -> WeightPolynomial {
        let mut p = WeightPolynomial::default();
        for v in &self.vertices {
            p.add_term(c.weight(v), 1);
        }
        p
    }

    pub fn to_dot(&self, label: impl Fn(&V) -> String) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let l = label(v).replace('"', "\\\"");
            let _ = writeln!(s, "  v{k} [label=\"{l}\"];");
        }
        for &(a, i, b) in &self.arrows {
            let _ = writeln!(s, "  v{a} -> v{b} [label=\"{i}\"];");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, encode: impl Fn(&V) -> Value) -> Value {
        json!({
            "schema": "demazure/crystal-graph@1",
            "highest": 0,
            "vertices": self.vertices.iter().map(&encode).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|&(a, i, b)| json!([a, i, b])).collect::<Vec<_>>(),
        })
    }
}
