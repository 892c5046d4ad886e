//! `(e,s)`-cores: the orbit of the empty multipartition, its Bruhat order, the
//! `b_{i,j}` statistics and the generalized Young lattice.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde_json::{json, Value};

use super::partition::{multipartition_display, multipartition_rank, multipartitions_up_to, Multipartition, Partition};
use super::symbol::{node_letters, Modulus, NodeKind, Symbol};
use super::uglov::{runners_of, MultiSymbol};
use crate::error::{Error, Result};
use crate::weyl::Node;

/// Charges `(s′_a, s′_b)` with `s′_a = s_a` and `0 ≤ s′_b − s′_a < e`.
fn normalized_pair(sa: i64, sb: i64, e: usize) -> (i64, i64) {
    (sa, sa + (sb - sa).rem_euclid(e as i64))
}

/// Whether `λ` is an `(e,s)`-core.
///
/// For finite `e` and `l > 1` every pair `a < b` must satisfy
/// `L_{s′_a}(λ^a) ⊂ L_{s′_b}(λ^b) ⊂ L_{s′_a+e}(λ^a)`; for `l = 1` the condition is
/// `L_s(λ) ⊂ L_{s+e}(λ)`. For `e = ∞` the runners are nested by charge:
/// `L_{s_a}(λ^a) ⊂ L_{s_b}(λ^b)` whenever `s_a ≤ s_b`.
pub fn is_es_core(lambda: &[Partition], modulus: Modulus, s: &[i64]) -> Result<bool> {
    if lambda.len() != s.len() || s.is_empty() {
        return Err(Error::ShapeMismatch);
    }
    let runner = |k: usize, c: i64| Symbol::new(c, lambda[k].clone());
    let l = s.len();
    Ok(match modulus {
        Modulus::Finite(e) => {
            if l == 1 {
                runner(0, s[0]).subset_of(&runner(0, s[0] + e as i64))
            } else {
                (0..l).all(|a| {
                    (a + 1..l).all(|b| {
                        let (sa, sb) = normalized_pair(s[a], s[b], e);
                        runner(a, sa).subset_of(&runner(b, sb)) && runner(b, sb).subset_of(&runner(a, sa + e as i64))
                    })
                })
            }
        }
        Modulus::Infinite => {
            (0..l).all(|a| (0..l).all(|b| a == b || s[a] > s[b] || runner(a, s[a]).subset_of(&runner(b, s[b]))))
        }
    })
}

/// The orbit test on a charged abacus.
pub fn orbit_check(m: &MultiSymbol, modulus: Modulus) -> bool {
    is_es_core(&m.partitions, modulus, &m.charges).unwrap_or(false)
}

/// All `(e,s)`-cores of rank at most `rank`.
pub fn cores_up_to(modulus: Modulus, s: &[i64], rank: usize) -> Vec<Multipartition> {
    multipartitions_up_to(s.len(), rank).into_iter().filter(|m| is_es_core(m, modulus, s).unwrap_or(false)).collect()
}

/// `((λ^l)ᵗ,…,(λ¹)ᵗ)` with multicharge `(−s_l,…,−s₁)`.
pub fn transpose_core(lambda: &[Partition], modulus: Modulus, s: &[i64]) -> Result<(Multipartition, Vec<i64>)> {
    if !is_es_core(lambda, modulus, s)? {
        return Err(Error::Invalid(format!("{} is not a core for {s:?}", multipartition_display(lambda))));
    }
    let t: Multipartition = lambda.iter().rev().map(Partition::transpose).collect();
    let c: Vec<i64> = s.iter().rev().map(|x| -x).collect();
    Ok((t, c))
}

/// `b_{i,j}` for charges reduced into `0..e`, and whether every column
/// `(b_{i,1},…,b_{i,l})` lies in some `{γ_i, γ_i + e}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BStatistics {
    /// `table[i][j]`.
    pub table: Vec<Vec<i64>>,
    pub consistent: bool,
}

pub fn b_statistics(lambda: &[Partition], e: usize, s: &[i64]) -> Result<BStatistics> {
    if lambda.len() != s.len() {
        return Err(Error::ShapeMismatch);
    }
    let e_ = e as i64;
    let table: Vec<Vec<i64>> = (0..e_)
        .map(|i| {
            lambda
                .iter()
                .zip(s)
                .map(|(p, &c)| {
                    let sym = Symbol::new(c.rem_euclid(e_), p.clone());
                    let mut x = sym.top();
                    while !(sym.contains(x) && x.rem_euclid(e_) == i) {
                        x -= 1;
                    }
                    x
                })
                .collect()
        })
        .collect();
    let consistent = table.iter().all(|row| {
        let lo = *row.iter().min().expect("l ≥ 1");
        row.iter().all(|&b| b == lo || b == lo + e_)
    });
    Ok(BStatistics { table, consistent })
}

/// Bruhat order on the orbit: componentwise inclusion of Young diagrams.
pub fn multipartition_bruhat(lambda: &[Partition], mu: &[Partition]) -> Result<bool> {
    if lambda.len() != mu.len() {
        return Err(Error::ShapeMismatch);
    }
    Ok(lambda.iter().zip(mu).all(|(a, b)| b.contains(a)))
}

/// The multipartition obtained by adding every addable `i`-node, if there is one and
/// no removable `i`-node.
pub fn add_all_nodes(lambda: &[Partition], modulus: Modulus, s: &[i64], i: Node) -> Option<Multipartition> {
    let letters = node_letters(&runners_of(s, lambda), modulus, i);
    if letters.is_empty() || letters.iter().any(|l| l.kind == NodeKind::Removable) {
        return None;
    }
    let mut out = lambda.to_vec();
    for l in letters {
        out[l.runner].add_box(l.row);
    }
    Some(out)
}

/// Cores joined by `λ → μ` when `μ` adds all addable `i`-nodes of `λ`.
#[derive(Clone, Debug)]
pub struct CoreLattice {
    pub nodes: Vec<Multipartition>,
    pub arrows: Vec<(usize, Node, usize)>,
}

impl CoreLattice {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph cores {\n");
        for (k, v) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  {k} [label=\"{}\"];", multipartition_display(v));
        }
        for (a, i, b) in &self.arrows {
            let _ = writeln!(s, "  {a} -> {b} [label=\"{i}\"];");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "demazure/core-lattice@1",
            "nodes": self.nodes,
            "arrows": self.arrows.iter().map(|(a, i, b)| json!([a, i, b])).collect::<Vec<_>>(),
        })
    }
}

pub fn core_lattice(modulus: Modulus, s: &[i64], rank_bound: usize) -> CoreLattice {
    let empty = vec![Partition::empty(); s.len()];
    let mut lattice = CoreLattice { nodes: vec![empty.clone()], arrows: Vec::new() };
    let mut index = HashMap::from([(empty, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let lam = lattice.nodes[k].clone();
        let mut residues: BTreeMap<Node, ()> = BTreeMap::new();
        for sym in runners_of(s, &lam) {
            let p = &sym.partition;
            for r in 0..=p.len() {
                if r == 0 || p.part(r - 1) > p.part(r) {
                    residues.insert(modulus.residue(p.part(r) as i64 - r as i64 + sym.charge), ());
                }
            }
        }
        for &i in residues.keys() {
            let Some(mu) = add_all_nodes(&lam, modulus, s, i) else { continue };
            if multipartition_rank(&mu) > rank_bound {
                continue;
            }
            let t = match index.get(&mu) {
                Some(&t) => t,
                None => {
                    let t = lattice.nodes.len();
                    index.insert(mu.clone(), t);
                    lattice.nodes.push(mu);
                    queue.push_back(t);
                    t
                }
            };
            lattice.arrows.push((k, i, t));
        }
    }
    lattice
}
