//! Realization-independent crystal machinery.
//!
//! A realization implements [`Crystal`]. Everything else here, from tensor products,
//! the Weyl group action and orbits to dilatation, Key maps and Demazure crystals, is
//! written against that trait only.
//!
//! Tensor products follow the rule
//! `f̃_i(u⊗v) = f̃_i(u)⊗v` if `φ_i(v) ≤ ε_i(u)`, else `u⊗f̃_i(v)`, and
//! `ẽ_i(u⊗v) = u⊗ẽ_i(v)` if `ε_i(u) ≤ φ_i(v)`, else `ẽ_i(u)⊗v`.

pub mod character;
pub mod demazure;
pub mod graph;
pub mod key;

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use crate::weyl::{dominant_conjugate, CartanDatum, Node, Weight, WeylWord};

pub use character::WeightPolynomial;
pub use graph::CrystalGraph;

/// A crystal realization: partial operators `ẽ_i`, `f̃_i` and a weight map.
pub trait Crystal {
    type Vertex: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn datum(&self) -> &CartanDatum;

    fn f(&self, i: Node, b: &Self::Vertex) -> Option<Self::Vertex>;

    fn e(&self, i: Node, b: &Self::Vertex) -> Option<Self::Vertex>;

    fn weight(&self, b: &Self::Vertex) -> Weight;

    fn phi(&self, i: Node, b: &Self::Vertex) -> usize {
        let mut n = 0;
        let mut cur = b.clone();
        while let Some(next) = self.f(i, &cur) {
            cur = next;
            n += 1;
        }
        n
    }

    fn eps(&self, i: Node, b: &Self::Vertex) -> usize {
        let mut n = 0;
        let mut cur = b.clone();
        while let Some(next) = self.e(i, &cur) {
            cur = next;
            n += 1;
        }
        n
    }

    /// `f̃_i^k(b)`.
    fn f_times(&self, i: Node, b: &Self::Vertex, k: usize) -> Option<Self::Vertex> {
        let mut cur = b.clone();
        for _ in 0..k {
            cur = self.f(i, &cur)?;
        }
        Some(cur)
    }
}

impl<C: Crystal + ?Sized> Crystal for &C {
    type Vertex = C::Vertex;

    fn datum(&self) -> &CartanDatum {
        (**self).datum()
    }
    fn f(&self, i: Node, b: &Self::Vertex) -> Option<Self::Vertex> {
        (**self).f(i, b)
    }
    fn e(&self, i: Node, b: &Self::Vertex) -> Option<Self::Vertex> {
        (**self).e(i, b)
    }
    fn weight(&self, b: &Self::Vertex) -> Weight {
        (**self).weight(b)
    }
    fn phi(&self, i: Node, b: &Self::Vertex) -> usize {
        (**self).phi(i, b)
    }
    fn eps(&self, i: Node, b: &Self::Vertex) -> usize {
        (**self).eps(i, b)
    }
    fn f_times(&self, i: Node, b: &Self::Vertex, k: usize) -> Option<Self::Vertex> {
        (**self).f_times(i, b, k)
    }
}

/// Applies `f̃_i` `k` times.
pub fn f_pow<C: Crystal>(c: &C, i: Node, b: &C::Vertex, k: usize) -> Option<C::Vertex> {
    c.f_times(i, b, k)
}

/// Applies `ẽ_i` `k` times.
pub fn e_pow<C: Crystal>(c: &C, i: Node, b: &C::Vertex, k: usize) -> Option<C::Vertex> {
    let mut cur = b.clone();
    for _ in 0..k {
        cur = c.e(i, &cur)?;
    }
    Some(cur)
}

/// Locates the factor acted on by `f̃_i` from the factor data `(φ, ε)`, left to right.
/// Also returns `φ_i` of the whole tensor.
fn f_slot(data: &[(usize, usize)]) -> (Option<usize>, usize) {
    let mut open_minus = 0usize;
    let mut unpaired = 0usize;
    let mut slot = None;
    for (k, &(phi, eps)) in data.iter().enumerate() {
        let cancelled = phi.min(open_minus);
        open_minus -= cancelled;
        if phi > cancelled {
            unpaired += phi - cancelled;
            slot = Some(k);
        }
        open_minus += eps;
    }
    (slot, unpaired)
}

/// How many times each factor is lowered by `f̃_i^k`: the `k` rightmost unpaired
/// `+` signs, all at once.
fn f_counts(data: &[(usize, usize)], k: usize) -> Option<Vec<usize>> {
    let mut open_minus = 0usize;
    let mut free: Vec<usize> = Vec::with_capacity(data.len());
    for &(phi, eps) in data {
        let cancelled = phi.min(open_minus);
        open_minus -= cancelled;
        free.push(phi - cancelled);
        open_minus += eps;
    }
    let mut left = k;
    for x in free.iter_mut().rev() {
        *x = (*x).min(left);
        left -= *x;
    }
    (left == 0).then_some(free)
}

/// Locates the factor acted on by `ẽ_i`, and `ε_i` of the whole tensor.
fn e_slot(data: &[(usize, usize)]) -> (Option<usize>, usize) {
    let mut open_plus = 0usize;
    let mut unpaired = 0usize;
    let mut slot = None;
    for (k, &(phi, eps)) in data.iter().enumerate().rev() {
        let cancelled = eps.min(open_plus);
        open_plus -= cancelled;
        if eps > cancelled {
            unpaired += eps - cancelled;
            slot = Some(k);
        }
        open_plus += phi;
    }
    (slot, unpaired)
}

/// Tensor products `b₁ ⊗ ⋯ ⊗ b_m` of vertices of one realization.
#[derive(Clone, Debug)]
pub struct Tensor<C> {
    pub base: C,
}

impl<C: Crystal> Tensor<C> {
    pub fn new(base: C) -> Self {
        Tensor { base }
    }

    fn data(&self, i: Node, b: &[C::Vertex]) -> Vec<(usize, usize)> {
        b.iter().map(|x| (self.base.phi(i, x), self.base.eps(i, x))).collect()
    }
}

impl<C: Crystal> Crystal for Tensor<C> {
    type Vertex = Vec<C::Vertex>;

    fn datum(&self) -> &CartanDatum {
        self.base.datum()
    }

    fn f(&self, i: Node, b: &Self::Vertex) -> Option<Self::Vertex> {
        let (slot, _) = f_slot(&self.data(i, b));
        let k = slot?;
        let mut out = b.clone();
        out[k] = self.base.f(i, &b[k])?;
        Some(out)
    }

    fn e(&self, i: Node, b: &Self::Vertex) -> Option<Self::Vertex> {
        let (slot, _) = e_slot(&self.data(i, b));
        let k = slot?;
        let mut out = b.clone();
        out[k] = self.base.e(i, &b[k])?;
        Some(out)
    }

    fn weight(&self, b: &Self::Vertex) -> Weight {
        b.iter().fold(Weight::zero(self.datum()), |acc, x| acc.add(&self.base.weight(x)))
    }

    fn phi(&self, i: Node, b: &Self::Vertex) -> usize {
        f_slot(&self.data(i, b)).1
    }

    fn eps(&self, i: Node, b: &Self::Vertex) -> usize {
        e_slot(&self.data(i, b)).1
    }

    fn f_times(&self, i: Node, b: &Self::Vertex, k: usize) -> Option<Self::Vertex> {
        let counts = f_counts(&self.data(i, b), k)?;
        b.iter().zip(counts).map(|(x, n)| if n == 0 { Some(x.clone()) } else { self.base.f_times(i, x, n) }).collect()
    }
}

/// `f̃_i(u⊗v)` for a pair of vertices.
pub fn tensor_f<C: Crystal>(c: &C, i: Node, u: &C::Vertex, v: &C::Vertex) -> Option<(C::Vertex, C::Vertex)> {
    if c.phi(i, v) <= c.eps(i, u) {
        Some((c.f(i, u)?, v.clone()))
    } else {
        Some((u.clone(), c.f(i, v)?))
    }
}

/// `ẽ_i(u⊗v)` for a pair of vertices.
pub fn tensor_e<C: Crystal>(c: &C, i: Node, u: &C::Vertex, v: &C::Vertex) -> Option<(C::Vertex, C::Vertex)> {
    if c.eps(i, u) <= c.phi(i, v) {
        Some((u.clone(), c.e(i, v)?))
    } else {
        Some((c.e(i, u)?, v.clone()))
    }
}

/// The reflection `s_i` on the `i`-string through `b`.
pub fn weyl_act<C: Crystal>(c: &C, i: Node, b: &C::Vertex) -> C::Vertex {
    let phi = c.phi(i, b);
    let eps = c.eps(i, b);
    if phi >= eps {
        f_pow(c, i, b, phi - eps).expect("string length")
    } else {
        e_pow(c, i, b, eps - phi).expect("string length")
    }
}

/// `w · b` for a word `w = s_{i₁}⋯s_{i_k}`; the last letter acts first.
pub fn weyl_act_word<C: Crystal>(c: &C, w: &[Node], b: &C::Vertex) -> C::Vertex {
    w.iter().rev().fold(b.clone(), |acc, &i| weyl_act(c, i, &acc))
}

/// Which raising operator to use when several apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PathChoice {
    #[default]
    Smallest,
    Largest,
}

/// Raises `b` to its highest weight vertex. Returns that vertex and the sequence
/// `j₁, j₂, …` of raising operators used, so that `b = f̃_{j₁} f̃_{j₂} ⋯ (top)`.
pub fn path_to_highest<C: Crystal>(c: &C, b: &C::Vertex, choice: PathChoice) -> (C::Vertex, Vec<Node>) {
    let nodes: Vec<Node> = match choice {
        PathChoice::Smallest => c.datum().nodes().to_vec(),
        PathChoice::Largest => c.datum().nodes().iter().rev().copied().collect(),
    };
    let mut cur = b.clone();
    let mut seq = Vec::new();
    'outer: loop {
        for &i in &nodes {
            if let Some(up) = c.e(i, &cur) {
                cur = up;
                seq.push(i);
                continue 'outer;
            }
        }
        return (cur, seq);
    }
}

/// Replays a raising sequence from `top` with lowering operators.
pub fn replay<C: Crystal>(c: &C, top: &C::Vertex, seq: &[Node]) -> Option<C::Vertex> {
    seq.iter().rev().try_fold(top.clone(), |acc, &i| c.f(i, &acc))
}

/// Whether `b` lies in the Weyl orbit of the highest weight `lambda`: its weight is
/// conjugate to `lambda`.
pub fn is_extremal<C: Crystal>(c: &C, lambda: &Weight, b: &C::Vertex) -> bool {
    let cap = 10_000;
    dominant_conjugate(c.datum(), &c.weight(b), cap).as_ref() == Some(lambda)
}

/// Recovers `w ∈ W^λ` with `b = b_{wλ}` for an extremal vertex `b`.
pub fn orbit_word<C: Crystal>(c: &C, hw: &C::Vertex, b: &C::Vertex) -> Option<WeylWord> {
    let d = c.datum();
    let mut cur = b.clone();
    let mut letters = Vec::new();
    while &cur != hw {
        let mut moved = false;
        for &i in d.nodes() {
            let eps = c.eps(i, &cur);
            if eps > 0 {
                if c.phi(i, &cur) > 0 {
                    return None;
                }
                cur = e_pow(c, i, &cur, eps)?;
                letters.push(i);
                moved = true;
                break;
            }
        }
        if !moved {
            return None;
        }
    }
    let w = WeylWord::new(d, &letters).ok()?;
    (w.length() == letters.len()).then_some(w)
}

/// The orbit `O(λ)`: one pair `(w, b_{wλ})` per vertex, `w` minimal in `W^λ`,
/// in breadth-first order of length. `depth_bound` truncates by the number of
/// lowering steps from `b_λ` (the rank in affine realizations).
pub fn orbit<C: Crystal>(c: &C, hw: &C::Vertex, depth_bound: Option<usize>) -> Vec<(WeylWord, C::Vertex)> {
    let d = c.datum();
    let mut seen: HashMap<C::Vertex, usize> = HashMap::new();
    seen.insert(hw.clone(), 0);
    let mut out = vec![(WeylWord::identity(), hw.clone())];
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some((idx, depth)) = queue.pop_front() {
        let (w, b) = out[idx].clone();
        for &i in d.nodes() {
            let phi = c.phi(i, &b);
            if phi == 0 {
                continue;
            }
            let nd = depth + phi;
            if depth_bound.is_some_and(|n| nd > n) {
                continue;
            }
            let nb = f_pow(c, i, &b, phi).expect("string length");
            if seen.contains_key(&nb) {
                continue;
            }
            let nw = w.left_mul(d, i).expect("valid node");
            seen.insert(nb.clone(), out.len());
            queue.push_back((out.len(), nd));
            out.push((nw, nb));
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod testing {
    //! A two-letter crystal for `A₁` used by the engine tests.
    use super::*;

    #[derive(Clone, Debug)]
    pub struct Letters {
        pub d: CartanDatum,
    }

    impl Default for Letters {
        fn default() -> Self {
            Letters { d: CartanDatum::finite_a(1).unwrap() }
        }
    }

    impl Crystal for Letters {
        type Vertex = u8;
        fn datum(&self) -> &CartanDatum {
            &self.d
        }
        fn f(&self, i: Node, b: &u8) -> Option<u8> {
            (i == 1 && *b == 1).then_some(2)
        }
        fn e(&self, i: Node, b: &u8) -> Option<u8> {
            (i == 1 && *b == 2).then_some(1)
        }
        fn weight(&self, b: &u8) -> Weight {
            Weight { pairings: vec![if *b == 1 { 1 } else { -1 }], degree: 0 }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::testing::Letters;
    use super::*;

    #[test]
    fn a1_square_by_hand() {
        let c = Tensor::new(Letters::default());
        // 1⊗1 → 2⊗1? φ(v)=1 > ε(u)=0 so f acts on the right factor.
        assert_eq!(c.f(1, &vec![1, 1]), Some(vec![1, 2]));
        assert_eq!(c.f(1, &vec![1, 2]), Some(vec![2, 2]));
        assert_eq!(c.f(1, &vec![2, 2]), None);
        assert_eq!(c.f(1, &vec![2, 1]), None);
        assert_eq!(c.e(1, &vec![2, 1]), None);
        assert_eq!(c.e(1, &vec![1, 1]), None);
        assert_eq!(c.e(1, &vec![2, 2]), Some(vec![1, 2]));
        assert_eq!(c.phi(1, &vec![1, 1]), 2);
        assert_eq!(c.eps(1, &vec![2, 1]), 0);
        assert_eq!(c.phi(1, &vec![2, 1]), 0);
        assert_eq!(tensor_f(&Letters::default(), 1, &1, &1), Some((1, 2)));
        assert_eq!(tensor_e(&Letters::default(), 1, &2, &2), Some((1, 2)));
    }

    #[test]
    fn slot_rule_matches_pairwise_rule() {
        let l = Letters::default();
        let t = Tensor::new(l.clone());
        for a in 1..=2u8 {
            for b in 1..=2u8 {
                for c in 1..=2u8 {
                    let flat = vec![a, b, c];
                    let nested = Tensor::new(Tensor::new(l.clone()));
                    let left = vec![vec![a, b], vec![c]];
                    let right = vec![vec![a], vec![b, c]];
                    let f_flat = t.f(1, &flat);
                    let f_l = nested.f(1, &left).map(|v| v.concat());
                    let f_r = nested.f(1, &right).map(|v| v.concat());
                    assert_eq!(f_flat, f_l);
                    assert_eq!(f_flat, f_r);
                    let e_flat = t.e(1, &flat);
                    assert_eq!(e_flat, nested.e(1, &left).map(|v| v.concat()));
                    assert_eq!(e_flat, nested.e(1, &right).map(|v| v.concat()));
                }
            }
        }
    }

    #[test]
    fn tensor_powers_match_iteration() {
        let t = Tensor::new(Letters::default());
        for n in 1..=6u32 {
            for code in 0..(1u32 << n) {
                let b: Vec<u8> = (0..n).map(|k| 1 + ((code >> k) & 1) as u8).collect();
                for k in 0..=n as usize + 1 {
                    let mut slow = Some(b.clone());
                    for _ in 0..k {
                        slow = slow.and_then(|x| t.f(1, &x));
                    }
                    assert_eq!(t.f_times(1, &b, k), slow, "{b:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn weyl_action_on_a1_string() {
        let c = Tensor::new(Letters::default());
        assert_eq!(weyl_act(&c, 1, &vec![1, 1]), vec![2, 2]);
        assert_eq!(weyl_act(&c, 1, &vec![1, 2]), vec![1, 2]);
        assert_eq!(weyl_act(&c, 1, &vec![2, 1]), vec![2, 1]);
        let o = orbit(&c, &vec![1, 1], None);
        assert_eq!(o.len(), 2);
        assert_eq!(orbit_word(&c, &vec![1, 1], &vec![2, 2]).unwrap().letters(), &[1]);
        assert_eq!(orbit_word(&c, &vec![1, 1], &vec![1, 2]), None);
    }
}
