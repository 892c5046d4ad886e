//! Charged partitions (symbols), abaci and the level 1 crystal.
//!
//! The symbol `S_s(λ)` is the set of beta numbers `λ_i − i + 1 + s`, `i ≥ 1`. Every
//! integer below `s − ℓ(λ)` is a bead, every integer above `λ₁ + s` is empty. Adding
//! a box whose content plus charge is `x` moves the bead at `x` to `x + 1`.
//!
//! The crystal operators read the addable (`A`) and removable (`R`) `i`-nodes from
//! right to left, that is by decreasing `content + charge`, cancel every factor `RA`
//! and act on the rightmost surviving `A` (for `f̃_i`) or the leftmost surviving `R`
//! (for `ẽ_i`). The component of `S_s(∅)` is the set of `e`-restricted partitions.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use super::partition::Partition;
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::weyl::{CartanDatum, CartanKind, Node, Weight};

/// Residues modulo `e`, or no reduction at all for `e = ∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Modulus {
    Finite(usize),
    Infinite,
}

impl Modulus {
    pub fn residue(self, x: i64) -> i64 {
        match self {
            Modulus::Finite(e) => x.rem_euclid(e as i64),
            Modulus::Infinite => x,
        }
    }

    pub fn from_datum(d: &CartanDatum) -> Result<Self> {
        match d.kind() {
            CartanKind::AffineA(e) => Ok(Modulus::Finite(e)),
            CartanKind::InfiniteA { .. } => Ok(Modulus::Infinite),
            _ => Err(Error::Invalid(format!("{} is not of affine or infinite type A", d.tag()))),
        }
    }
}

/// A charged partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub charge: i64,
    pub partition: Partition,
}

impl Symbol {
    pub fn new(charge: i64, partition: Partition) -> Self {
        Symbol { charge, partition }
    }

    pub fn empty(charge: i64) -> Self {
        Symbol::new(charge, Partition::empty())
    }

    /// Every position `≤ floor()` is a bead.
    pub fn floor(&self) -> i64 {
        self.charge - self.partition.len() as i64
    }

    /// The largest bead.
    pub fn top(&self) -> i64 {
        self.partition.part(0) as i64 + self.charge
    }

    /// The beta number of row `i` (1-based).
    pub fn beta(&self, i: usize) -> i64 {
        self.partition.part(i - 1) as i64 - i as i64 + 1 + self.charge
    }

    pub fn contains(&self, x: i64) -> bool {
        if x <= self.floor() {
            return true;
        }
        self.partition.parts().iter().enumerate().any(|(r, &p)| p as i64 - r as i64 + self.charge == x)
    }

    /// Beads `≥ lo`, in decreasing order.
    pub fn beads_from(&self, lo: i64) -> Vec<i64> {
        let mut out = Vec::new();
        let mut i = 1;
        loop {
            let b = self.beta(i);
            if b < lo {
                return out;
            }
            out.push(b);
            i += 1;
        }
    }

    /// The symbol whose beads `≥ lo` are `beads` and which is full below `lo`.
    pub fn from_beads(beads: &BTreeSet<i64>, lo: i64) -> Result<Self> {
        if beads.iter().any(|&b| b < lo) {
            return Err(Error::Invalid("bead below the window".into()));
        }
        let k = beads.len() as i64;
        let charge = lo + k - 1;
        let parts = beads.iter().rev().enumerate().map(|(r, &b)| (b + r as i64 - charge) as usize).collect();
        Ok(Symbol::new(charge, Partition::new(parts)?))
    }

    /// `S ⊆ S′` as bead sets, i.e. `L_s(λ) ⊂ L_t(μ)`.
    pub fn subset_of(&self, other: &Symbol) -> bool {
        let lo = self.floor().min(other.floor());
        (lo..=self.top()).all(|x| !self.contains(x) || other.contains(x))
    }

    pub fn shifted(&self, by: i64) -> Symbol {
        Symbol::new(self.charge + by, self.partition.clone())
    }

    /// `{charge, beads, window}` where every position below the window is a bead.
    pub fn to_json(&self) -> Value {
        let lo = self.floor() + 1;
        let hi = self.top().max(lo);
        let beads: Vec<i64> = self.beads_from(lo).into_iter().rev().collect();
        json!({ "charge": self.charge, "beads": beads, "window": [lo, hi] })
    }

    /// One row of the abacus on `lo..=hi`; `●` bead, `○` empty, `┆` between 0 and 1.
    pub fn abacus_row(&self, lo: i64, hi: i64) -> String {
        let mut s = String::new();
        for x in lo..=hi {
            if x == 1 {
                s.push_str("┆ ");
            }
            s.push(if self.contains(x) { '●' } else { '○' });
            if x != hi {
                s.push(' ');
            }
        }
        if hi == 0 {
            s.push_str(" ┆");
        }
        s
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let beads: Vec<String> = self.beads_from(self.floor() - 1).into_iter().rev().map(|b| b.to_string()).collect();
        write!(f, "(…,{})", beads.join(","))
    }
}

/// Abacus of several runners, the first symbol drawn on top.
pub fn abacus(runners: &[Symbol]) -> String {
    let lo = runners.iter().map(Symbol::floor).min().unwrap_or(0).min(0) - 2;
    let hi = runners.iter().map(Symbol::top).max().unwrap_or(0).max(1) + 2;
    runners.iter().map(|r| r.abacus_row(lo, hi)).collect::<Vec<_>>().join("\n")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum NodeKind {
    Addable,
    Removable,
}

/// An addable or removable node: runner, row (0-based) and `content + charge`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct NodeLetter {
    pub label: i64,
    pub runner: usize,
    pub row: usize,
    pub kind: NodeKind,
}

/// The `i`-nodes of all runners, ordered by increasing label and then by increasing
/// runner; this is the reading order reversed.
pub(crate) fn node_letters(runners: &[Symbol], modulus: Modulus, i: Node) -> Vec<NodeLetter> {
    let mut out = Vec::new();
    for (k, sym) in runners.iter().enumerate() {
        let p = &sym.partition;
        for r in 0..=p.len() {
            let part = p.part(r);
            if r == 0 || p.part(r - 1) > part {
                let label = part as i64 - r as i64 + sym.charge;
                if modulus.residue(label) == i {
                    out.push(NodeLetter { label, runner: k, row: r, kind: NodeKind::Addable });
                }
            }
            if part > 0 && p.part(r + 1) < part {
                let label = part as i64 - 1 - r as i64 + sym.charge;
                if modulus.residue(label) == i {
                    out.push(NodeLetter { label, runner: k, row: r, kind: NodeKind::Removable });
                }
            }
        }
    }
    out.sort_by(|a, b| a.label.cmp(&b.label).then(a.runner.cmp(&b.runner)));
    out
}

/// Positions of the normal addable and removable nodes, in increasing order, after
/// cancelling `RA` in the reading order.
pub(crate) fn reduce(letters: &[NodeLetter]) -> (Vec<usize>, Vec<usize>) {
    let mut free_r = Vec::new();
    let mut open_a: Vec<usize> = Vec::new();
    for (k, l) in letters.iter().enumerate() {
        match l.kind {
            NodeKind::Addable => open_a.push(k),
            NodeKind::Removable => {
                if open_a.pop().is_none() {
                    free_r.push(k);
                }
            }
        }
    }
    (open_a, free_r)
}

pub(crate) fn apply_f(runners: &[Symbol], modulus: Modulus, i: Node) -> Option<Vec<Symbol>> {
    let letters = node_letters(runners, modulus, i);
    let (a, _) = reduce(&letters);
    let l = letters[*a.first()?];
    let mut out = runners.to_vec();
    out[l.runner].partition.add_box(l.row);
    Some(out)
}

pub(crate) fn apply_e(runners: &[Symbol], modulus: Modulus, i: Node) -> Option<Vec<Symbol>> {
    let letters = node_letters(runners, modulus, i);
    let (_, r) = reduce(&letters);
    let l = letters[*r.last()?];
    let mut out = runners.to_vec();
    out[l.runner].partition.remove_box(l.row);
    Some(out)
}

pub(crate) fn string_lengths(runners: &[Symbol], modulus: Modulus, i: Node) -> (usize, usize) {
    let (a, r) = reduce(&node_letters(runners, modulus, i));
    (a.len(), r.len())
}

/// `Λ_s − Σ α_{res(b)}` over all boxes `b` of all runners.
pub(crate) fn weight_of(d: &CartanDatum, modulus: Modulus, runners: &[Symbol]) -> Weight {
    let nodes = d.nodes();
    let mut pairings = vec![0i64; nodes.len()];
    let mut degree = 0;
    let mut count = |label: i64, sign: i64, pairings: &mut Vec<i64>| {
        let res = modulus.residue(label);
        match modulus {
            Modulus::Finite(_) => {
                for (j, &nj) in nodes.iter().enumerate() {
                    pairings[j] += sign * d.cartan(res, nj).expect("residue is a node");
                }
                if res == 0 && sign < 0 {
                    degree -= 1;
                }
            }
            Modulus::Infinite => {
                for (j, &nj) in nodes.iter().enumerate() {
                    pairings[j] += sign
                        * match (res - nj).abs() {
                            0 => 2,
                            1 => -1,
                            _ => 0,
                        };
                }
            }
        }
    };
    for sym in runners {
        let s = modulus.residue(sym.charge);
        if let Ok(j) = d.index(s) {
            pairings[j] += 1;
        }
        for (r, &p) in sym.partition.parts().iter().enumerate() {
            for c in 0..p {
                count(c as i64 - r as i64 + sym.charge, -1, &mut pairings);
            }
        }
    }
    Weight { pairings, degree }
}

/// The crystal on charged partitions; `B(Λ_{s mod e})` is the component of the empty
/// partition with charge `s`.
#[derive(Clone, Debug)]
pub struct LevelOne {
    modulus: Modulus,
    datum: CartanDatum,
}

impl LevelOne {
    pub fn affine(e: usize) -> Result<Self> {
        Ok(LevelOne { modulus: Modulus::Finite(e), datum: CartanDatum::affine_a(e)? })
    }

    /// `𝔰𝔩_∞` restricted to the nodes `lo..=hi`.
    pub fn infinite(lo: Node, hi: Node) -> Result<Self> {
        Ok(LevelOne { modulus: Modulus::Infinite, datum: CartanDatum::infinite_a(lo, hi)? })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }
}

impl Crystal for LevelOne {
    type Vertex = Symbol;

    fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    fn f(&self, i: Node, b: &Symbol) -> Option<Symbol> {
        self.datum.index(i).ok()?;
        apply_f(std::slice::from_ref(b), self.modulus, i).map(|mut v| v.remove(0))
    }

    fn e(&self, i: Node, b: &Symbol) -> Option<Symbol> {
        self.datum.index(i).ok()?;
        apply_e(std::slice::from_ref(b), self.modulus, i).map(|mut v| v.remove(0))
    }

    fn weight(&self, b: &Symbol) -> Weight {
        weight_of(&self.datum, self.modulus, std::slice::from_ref(b))
    }

    fn phi(&self, i: Node, b: &Symbol) -> usize {
        if self.datum.index(i).is_err() {
            return 0;
        }
        string_lengths(std::slice::from_ref(b), self.modulus, i).0
    }

    fn eps(&self, i: Node, b: &Symbol) -> usize {
        if self.datum.index(i).is_err() {
            return 0;
        }
        string_lengths(std::slice::from_ref(b), self.modulus, i).1
    }
}

/// The characterizations of e-cores.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreTest {
    /// No hook of length `e`.
    Hook,
    /// Every `{A,R}`-word is made of `A`s only or of `R`s only, and stays so after
    /// removing all removable `i`-nodes for some `i`.
    ArWord,
    /// `x ∈ S_e(λ) ⇒ x − e ∈ S_e(λ)`.
    BetaShift,
    /// `L_t(λ) ⊂ L_{t+e}(λ)`.
    AbacusInclusion,
}

pub const CORE_TESTS: [CoreTest; 4] =
    [CoreTest::Hook, CoreTest::ArWord, CoreTest::BetaShift, CoreTest::AbacusInclusion];

pub fn is_e_core_by(lambda: &Partition, e: usize, test: CoreTest) -> bool {
    match test {
        CoreTest::Hook => lambda.hooks().iter().flatten().all(|&h| h != e),
        CoreTest::ArWord => {
            let mut sym = Symbol::new(0, lambda.clone());
            loop {
                let words: Vec<Vec<NodeLetter>> =
                    (0..e as Node).map(|i| node_letters(std::slice::from_ref(&sym), Modulus::Finite(e), i)).collect();
                let pure = words.iter().all(|w| {
                    w.iter().all(|l| l.kind == NodeKind::Addable) || w.iter().all(|l| l.kind == NodeKind::Removable)
                });
                if !pure {
                    return false;
                }
                let Some(w) = words.iter().find(|w| !w.is_empty() && w[0].kind == NodeKind::Removable) else {
                    return true;
                };
                let mut rows: Vec<usize> = w.iter().map(|l| l.row).collect();
                rows.sort_unstable_by(|a, b| b.cmp(a));
                for r in rows {
                    sym.partition.remove_box(r);
                }
            }
        }
        CoreTest::BetaShift => {
            let s = Symbol::new(e as i64, lambda.clone());
            s.beads_from(s.floor()).iter().all(|&x| s.contains(x - e as i64))
        }
        CoreTest::AbacusInclusion => {
            let s = Symbol::new(0, lambda.clone());
            s.subset_of(&s.shifted(e as i64))
        }
    }
}

/// Whether `λ` is an e-core. All four characterizations are evaluated in debug
/// builds and must agree.
pub fn is_e_core(lambda: &Partition, e: usize) -> bool {
    let v = is_e_core_by(lambda, e, CoreTest::Hook);
    debug_assert!(CORE_TESTS.iter().all(|&t| is_e_core_by(lambda, e, t) == v));
    v
}

/// One step `S ↦ S ∖ {p} ∪ {q}` of the level 1 right Key algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyStep {
    pub p: i64,
    pub q: i64,
}

/// The right Key of `S_s(λ)` in `B(Λ_s)` for `e`-restricted `λ`, with the steps taken.
pub fn level1_key_right_steps(sym: &Symbol, e: usize) -> Result<(Symbol, Vec<KeyStep>)> {
    if !sym.partition.is_restricted(e) {
        return Err(Error::Invalid(format!("{} is not {e}-restricted", sym.partition)));
    }
    let e_ = e as i64;
    let lo = sym.floor() - e_;
    let mut set: BTreeSet<i64> = sym.beads_from(lo).into_iter().collect();
    let has = |set: &BTreeSet<i64>, x: i64| x < lo || set.contains(&x);
    let bound = sym.partition.rank() * e;
    let mut steps = Vec::new();
    loop {
        let p = set.iter().rev().copied().find(|&x| !has(&set, x - e_));
        let Some(p) = p else { break };
        if steps.len() >= bound {
            return Err(Error::Invalid(format!("key iteration exceeded {bound} steps")));
        }
        let top = *set.last().expect("nonempty") + e_;
        let q = (p + 1..=top)
            .find(|&x| !has(&set, x) && has(&set, x - e_) && x.rem_euclid(e_) != p.rem_euclid(e_))
            .ok_or_else(|| Error::Invalid("no admissible q".into()))?;
        set.remove(&p);
        set.insert(q);
        steps.push(KeyStep { p, q });
    }
    Ok((Symbol::from_beads(&set, lo)?, steps))
}

pub fn level1_key_right(sym: &Symbol, e: usize) -> Result<Symbol> {
    Ok(level1_key_right_steps(sym, e)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::partition::{partitions_of, partitions_up_to};
    use crate::crystal::graph::CrystalGraph;
    use crate::crystal::key::{key_right, keys, KeyConfig};
    use crate::crystal::{orbit, orbit_word};
    use crate::weyl::bruhat_leq;

    fn p(parts: &[usize]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn beta_numbers_of_example() {
        let s = Symbol::new(0, p(&[5, 3, 3, 2]));
        assert_eq!(s.beads_from(-5), vec![5, 2, 1, -1, -4, -5]);
        assert!(s.contains(-6) && !s.contains(0) && !s.contains(3));
        let row = s.abacus_row(-9, 11);
        assert_eq!(row.chars().filter(|&c| c == '●').count(), 10);
        assert!(row.contains('┆'));
    }

    #[test]
    fn beads_round_trip() {
        for n in 0..=12 {
            for lambda in partitions_of(n) {
                for charge in -10..=10 {
                    let s = Symbol::new(charge, lambda.clone());
                    let lo = s.floor() - 3;
                    let set: BTreeSet<i64> = s.beads_from(lo).into_iter().collect();
                    assert_eq!(Symbol::from_beads(&set, lo).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn component_is_e_restricted() {
        for e in [2, 3] {
            let c = LevelOne::affine(e).unwrap();
            for charge in [0, 1] {
                let g = CrystalGraph::generate(&c, &Symbol::empty(charge), Some(8));
                let got: BTreeSet<Partition> = g.vertices.iter().map(|s| s.partition.clone()).collect();
                let want: BTreeSet<Partition> =
                    partitions_up_to(8).into_iter().filter(|l| l.is_restricted(e)).collect();
                assert_eq!(got, want, "e={e}");
                assert_eq!(g.sources(), vec![0]);
            }
        }
    }

    #[test]
    fn weights_drop_by_simple_roots() {
        let c = LevelOne::affine(3).unwrap();
        let g = CrystalGraph::generate(&c, &Symbol::empty(1), Some(6));
        for &(s, i, t) in &g.arrows {
            let alpha = Weight::simple_root(c.datum(), i).unwrap();
            assert_eq!(c.weight(&g.vertices[t]), c.weight(&g.vertices[s]).sub(&alpha));
            let w = c.weight(&g.vertices[s]);
            assert_eq!(
                w.pairing(c.datum(), i).unwrap(),
                c.phi(i, &g.vertices[s]) as i64 - c.eps(i, &g.vertices[s]) as i64
            );
        }
    }

    #[test]
    fn core_tests_agree() {
        for e in [2, 3, 4] {
            for lambda in partitions_up_to(10) {
                let v: Vec<bool> = CORE_TESTS.iter().map(|&t| is_e_core_by(&lambda, e, t)).collect();
                assert!(v.iter().all(|&x| x == v[0]), "{lambda} e={e}: {v:?}");
            }
        }
        assert!(is_e_core(&p(&[8, 6, 4, 2]), 3));
        assert!(is_e_core(&Partition::empty(), 2));
        assert!(!is_e_core(&p(&[5, 3, 3, 2]), 3));
    }

    #[test]
    fn orbit_is_cores_with_inclusion_order() {
        let c = LevelOne::affine(3).unwrap();
        let o = orbit(&c, &Symbol::empty(0), Some(12));
        let got: BTreeSet<Partition> = o.iter().map(|(_, s)| s.partition.clone()).collect();
        let want: BTreeSet<Partition> = partitions_up_to(12).into_iter().filter(|l| is_e_core(l, 3)).collect();
        assert_eq!(got, want);
        for (u, a) in &o {
            for (v, b) in &o {
                assert_eq!(bruhat_leq(c.datum(), u, v).unwrap(), b.partition.contains(&a.partition));
            }
        }
    }

    #[test]
    fn key_algorithm_example() {
        let s = Symbol::new(0, p(&[5, 3, 3, 2]));
        let (k, steps) = level1_key_right_steps(&s, 3).unwrap();
        assert_eq!(steps, vec![KeyStep { p: 1, q: 8 }]);
        assert_eq!(k.partition, p(&[8, 6, 4, 2]));
        assert_eq!(k.charge, 0);
        let c = LevelOne::affine(3).unwrap();
        assert_eq!(key_right(&c, &Symbol::empty(0), &s).unwrap(), k);
        assert!(level1_key_right(&Symbol::new(0, p(&[3])), 3).is_err());
    }

    #[test]
    fn key_algorithm_matches_dilatation() {
        let c = LevelOne::affine(3).unwrap();
        let hw = Symbol::empty(0);
        for n in 0..=5 {
            for lambda in partitions_of(n).into_iter().filter(|l| l.is_restricted(3)) {
                let s = Symbol::new(0, lambda);
                let (_, r) = keys(&c, &hw, &s, &KeyConfig::default()).unwrap();
                assert_eq!(level1_key_right(&s, 3).unwrap(), r, "{}", s.partition);
                assert!(orbit_word(&c, &hw, &r).is_some());
            }
        }
    }

    #[test]
    fn infinite_level_one_is_all_partitions() {
        let c = LevelOne::infinite(-6, 6).unwrap();
        let g = CrystalGraph::generate(&c, &Symbol::empty(0), Some(5));
        assert_eq!(g.len(), partitions_up_to(5).len());
    }
}
