//! The Kleshchev realization of `B(Λ_s)` and the Keys computed through it.
//!
//! A Kleshchev multipartition `(λ¹,…,λ^l)` is the tensor product
//! `S_{s_l}(λ^l) ⊗ ⋯ ⊗ S_{s₁}(λ¹)` of level one symbols. On multipartitions of rank
//! below `n` it coincides with the Uglov realization at any multicharge `t ≡ s`
//! whose consecutive gaps are at least `n + e`.
//!
//! The fundamental R-matrix exchanging two adjacent factors is computed inside Uglov
//! crystals. The `𝔰𝔩_∞` R-matrix `(a,b) → (b,a)`, a jeu de taquin on the two bead
//! columns, alternates with the component swap `(a,b) → (b+e,a)`. Each round adds
//! `e` to the first charge, so `2k` rounds carry `(v₁, v₂+ke)` to `(v₁+2ke, v₂+ke)`
//! and a last jeu de taquin lands in the Kleshchev window of `(s₂,s₁)`.

use std::collections::BTreeSet;

use super::partition::{multipartition_rank, Multipartition, Partition};
use super::symbol::{level1_key_right, LevelOne, Symbol};
use super::uglov::Uglov;
use crate::crystal::key::{key_left_reduced, key_right_reduced, RMatrix};
use crate::crystal::{Crystal, Tensor};
use crate::error::{Error, Result};
use crate::type_a::jdt_swap;
use crate::weyl::{CartanDatum, Node, Weight};

/// `B(Λ_{s_l}) ⊗ ⋯ ⊗ B(Λ_{s₁})` on multipartitions `(λ¹,…,λ^l)`.
#[derive(Clone, Debug)]
pub struct Kleshchev {
    charges: Vec<i64>,
    tensor: Tensor<LevelOne>,
}

impl Kleshchev {
    pub fn new(e: usize, charges: &[i64]) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::Invalid("empty multicharge".into()));
        }
        Ok(Kleshchev { charges: charges.to_vec(), tensor: Tensor::new(LevelOne::affine(e)?) })
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn empty(&self) -> Multipartition {
        vec![Partition::empty(); self.charges.len()]
    }

    /// The tensor factors, leftmost first.
    pub fn factors(&self, b: &[Partition]) -> Vec<Symbol> {
        factors_of(&self.charges, b)
    }

    /// The level one highest weight vertices, leftmost first.
    pub fn highest_factors(&self) -> Vec<Symbol> {
        self.charges.iter().rev().map(|&c| Symbol::empty(c)).collect()
    }

    fn lift(&self, b: &[Partition]) -> Option<Vec<Symbol>> {
        (b.len() == self.charges.len()).then(|| self.factors(b))
    }
}

fn factors_of(charges: &[i64], b: &[Partition]) -> Vec<Symbol> {
    charges.iter().zip(b).rev().map(|(&c, p)| Symbol::new(c, p.clone())).collect()
}

fn components_of(factors: Vec<Symbol>) -> Multipartition {
    factors.into_iter().rev().map(|s| s.partition).collect()
}

impl Crystal for Kleshchev {
    type Vertex = Multipartition;

    fn datum(&self) -> &CartanDatum {
        self.tensor.datum()
    }

    fn f(&self, i: Node, b: &Multipartition) -> Option<Multipartition> {
        self.tensor.f(i, &self.lift(b)?).map(components_of)
    }

    fn e(&self, i: Node, b: &Multipartition) -> Option<Multipartition> {
        self.tensor.e(i, &self.lift(b)?).map(components_of)
    }

    fn weight(&self, b: &Multipartition) -> Weight {
        self.tensor.weight(&self.factors(b))
    }

    fn phi(&self, i: Node, b: &Multipartition) -> usize {
        self.lift(b).map_or(0, |f| self.tensor.phi(i, &f))
    }

    fn eps(&self, i: Node, b: &Multipartition) -> usize {
        self.lift(b).map_or(0, |f| self.tensor.eps(i, &f))
    }
}

/// A multicharge `t ≡ s (mod e)` with `t_{j+1} − t_j ≥ n + e`.
pub fn spread_charges(s: &[i64], e: usize, n: usize) -> Vec<i64> {
    let e_ = e as i64;
    let gap = (n + e) as i64;
    let mut out: Vec<i64> = Vec::with_capacity(s.len());
    for &x in s {
        let t = match out.last() {
            None => x.rem_euclid(e_),
            Some(&prev) => {
                let lo = prev + gap;
                lo + (x - lo).rem_euclid(e_)
            }
        };
        out.push(t);
    }
    out
}

fn check_window(b: &[Partition], n: usize) -> Result<()> {
    let rank = multipartition_rank(b);
    if rank >= n {
        return Err(Error::WindowExceeded { rank, window: n });
    }
    Ok(())
}

/// `f̃_i` of the Kleshchev realization, computed in the Uglov realization at a
/// spread multicharge. Requires `rank(λ) < n`.
pub fn kleshchev_f(i: Node, b: &[Partition], s: &[i64], e: usize, n: usize) -> Result<Option<Multipartition>> {
    check_window(b, n)?;
    let u = Uglov::affine(e, &spread_charges(s, e, n))?;
    Ok(u.f(i, &b.to_vec()))
}

pub fn kleshchev_e(i: Node, b: &[Partition], s: &[i64], e: usize, n: usize) -> Result<Option<Multipartition>> {
    check_window(b, n)?;
    let u = Uglov::affine(e, &spread_charges(s, e, n))?;
    Ok(u.e(i, &b.to_vec()))
}

/// Beads `≥ lo` in increasing order.
fn column(sym: &Symbol, lo: i64) -> Vec<i64> {
    let mut c = sym.beads_from(lo);
    c.reverse();
    c
}

fn from_column(c: &[i64], lo: i64) -> Result<Symbol> {
    Symbol::from_beads(&c.iter().copied().collect::<BTreeSet<_>>(), lo)
}

/// The `𝔰𝔩_∞` isomorphism from charges `(a,b)` to `(b,a)` on `(x¹, x²)`.
fn infinite_swap(x1: &Symbol, x2: &Symbol, window: usize) -> Result<(Symbol, Symbol)> {
    let lo = x1.charge.min(x2.charge) - window as i64 - 2;
    let (left, right) = jdt_swap(&column(x2, lo), &column(x1, lo));
    let y2 = from_column(&left, lo)?;
    let y1 = from_column(&right, lo)?;
    debug_assert_eq!((y1.charge, y2.charge), (x2.charge, x1.charge));
    Ok((y1, y2))
}

/// The R-matrix of the Kleshchev realization `(s₁,s₂) → (s₂,s₁)`, i.e.
/// `B(Λ_{s₂})⊗B(Λ_{s₁}) → B(Λ_{s₁})⊗B(Λ_{s₂})`, on bipartitions of rank `< n`.
pub fn fundamental_rmatrix(b: &[Partition], s: (i64, i64), e: usize, n: usize) -> Result<Multipartition> {
    if b.len() != 2 {
        return Err(Error::ShapeMismatch);
    }
    check_window(b, n)?;
    let e_ = e as i64;
    let v1 = s.0.rem_euclid(e_);
    let v2 = v1 + (s.1 - s.0).rem_euclid(e_);
    let k = (n + 2 * e) as i64 / e_ + 1;
    let window = multipartition_rank(b);
    let mut x1 = Symbol::new(v1, b[0].clone());
    let mut x2 = Symbol::new(v2 + k * e_, b[1].clone());
    for _ in 0..2 * k {
        (x1, x2) = infinite_swap(&x1, &x2, window)?;
        (x1, x2) = (x2.shifted(e_), x1);
    }
    (x1, x2) = infinite_swap(&x1, &x2, window)?;
    Ok(vec![x1.partition, x2.partition])
}

/// [`fundamental_rmatrix`] on adjacent level one factors.
#[derive(Clone, Copy, Debug)]
pub struct FundamentalRMatrix {
    pub e: usize,
    /// Rank window: inputs have rank below `n`.
    pub n: usize,
}

impl RMatrix<Symbol> for FundamentalRMatrix {
    fn swap(&self, u: &Symbol, v: &Symbol, hu: &Symbol, hv: &Symbol) -> Result<(Symbol, Symbol)> {
        let m =
            fundamental_rmatrix(&[v.partition.clone(), u.partition.clone()], (hv.charge, hu.charge), self.e, self.n)?;
        Ok((Symbol::new(hv.charge, m[1].clone()), Symbol::new(hu.charge, m[0].clone())))
    }
}

fn level1_key(e: usize) -> impl Fn(&Symbol, &Symbol) -> Result<Symbol> {
    move |x, h| level1_key_right(&Symbol::new(h.charge, x.partition.clone()), e)
}

/// `K^R(λ)` in the Kleshchev realization: each factor is carried to the right end by
/// fundamental R-matrices and its level one Key is taken there.
pub fn higher_level_key_right(b: &[Partition], s: &[i64], e: usize) -> Result<Multipartition> {
    let c = Kleshchev::new(e, s)?;
    if b.len() != s.len() {
        return Err(Error::ShapeMismatch);
    }
    let r = FundamentalRMatrix { e, n: multipartition_rank(b) + 1 };
    let k = key_right_reduced(&c.highest_factors(), &c.factors(b), &r, &level1_key(e))?;
    Ok(components_of(k))
}

/// `K^L(λ)` in the Kleshchev realization, through the generic dilatation key on each
/// level one factor carried to the left end.
pub fn higher_level_key_left(b: &[Partition], s: &[i64], e: usize) -> Result<Multipartition> {
    let c = Kleshchev::new(e, s)?;
    if b.len() != s.len() {
        return Err(Error::ShapeMismatch);
    }
    let r = FundamentalRMatrix { e, n: multipartition_rank(b) + 1 };
    let lone = LevelOne::affine(e)?;
    let key =
        |x: &Symbol, h: &Symbol| crate::crystal::key::key_left(&lone, h, &Symbol::new(h.charge, x.partition.clone()));
    let k = key_left_reduced(&c.highest_factors(), &c.factors(b), &r, &key)?;
    Ok(components_of(k))
}
