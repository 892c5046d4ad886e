//! Uglov's level `l` realization on multipartitions.
//!
//! For a multicharge `s = (s₁,…,s_l)` the word `W_j` lists the `j`-nodes of the
//! runners `L_{s_l}(λ^l),…,L_{s₁}(λ¹)` in that order, and `w_i` concatenates the
//! `W_j` with `j ≡ i` by increasing `j`. With `e = ∞` only `W_i` is used.

use serde_json::{json, Value};

use super::partition::{Multipartition, Partition};
use super::symbol::{abacus, apply_e, apply_f, string_lengths, weight_of, Modulus, Symbol};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::weyl::{CartanDatum, Node, Weight};

/// A multicharge together with one partition per runner.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiSymbol {
    pub charges: Vec<i64>,
    pub partitions: Multipartition,
}

impl MultiSymbol {
    pub fn new(charges: Vec<i64>, partitions: Multipartition) -> Result<Self> {
        if charges.len() != partitions.len() || charges.is_empty() {
            return Err(Error::ShapeMismatch);
        }
        Ok(MultiSymbol { charges, partitions })
    }

    pub fn runner(&self, k: usize) -> Symbol {
        Symbol::new(self.charges[k], self.partitions[k].clone())
    }

    pub fn runners(&self) -> Vec<Symbol> {
        (0..self.charges.len()).map(|k| self.runner(k)).collect()
    }

    /// The abacus with the runner of `λ^l` on top.
    pub fn abacus(&self) -> String {
        let mut r = self.runners();
        r.reverse();
        abacus(&r)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "charges": self.charges,
            "partitions": self.partitions,
            "runners": self.runners().iter().map(Symbol::to_json).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn runners_of(charges: &[i64], m: &[Partition]) -> Vec<Symbol> {
    charges.iter().zip(m).map(|(&s, p)| Symbol::new(s, p.clone())).collect()
}

fn partitions_of(r: Vec<Symbol>) -> Multipartition {
    r.into_iter().map(|s| s.partition).collect()
}

/// A node window of `𝔰𝔩_∞` large enough for multipartitions of rank `≤ rank`.
pub fn infinite_window(charges: &[i64], rank: usize) -> (Node, Node) {
    let lo = charges.iter().copied().min().unwrap_or(0) - rank as i64 - 1;
    let hi = charges.iter().copied().max().unwrap_or(0) + rank as i64 + 1;
    (lo, hi)
}

#[derive(Clone, Debug)]
pub struct Uglov {
    charges: Vec<i64>,
    modulus: Modulus,
    datum: CartanDatum,
}

impl Uglov {
    pub fn affine(e: usize, charges: &[i64]) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::Invalid("empty multicharge".into()));
        }
        Ok(Uglov { charges: charges.to_vec(), modulus: Modulus::Finite(e), datum: CartanDatum::affine_a(e)? })
    }

    /// The `𝔰𝔩_∞` structure on the node window `lo..=hi`.
    pub fn infinite(charges: &[i64], lo: Node, hi: Node) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::Invalid("empty multicharge".into()));
        }
        Ok(Uglov { charges: charges.to_vec(), modulus: Modulus::Infinite, datum: CartanDatum::infinite_a(lo, hi)? })
    }

    pub fn new(modulus: Modulus, charges: &[i64], rank: usize) -> Result<Self> {
        match modulus {
            Modulus::Finite(e) => Self::affine(e, charges),
            Modulus::Infinite => {
                let (lo, hi) = infinite_window(charges, rank);
                Self::infinite(charges, lo, hi)
            }
        }
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn empty(&self) -> Multipartition {
        vec![Partition::empty(); self.charges.len()]
    }

    fn check(&self, b: &[Partition]) -> bool {
        b.len() == self.charges.len()
    }
}

impl Crystal for Uglov {
    type Vertex = Multipartition;

    fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    fn f(&self, i: Node, b: &Multipartition) -> Option<Multipartition> {
        self.datum.index(i).ok()?;
        if !self.check(b) {
            return None;
        }
        apply_f(&runners_of(&self.charges, b), self.modulus, i).map(partitions_of)
    }

    fn e(&self, i: Node, b: &Multipartition) -> Option<Multipartition> {
        self.datum.index(i).ok()?;
        if !self.check(b) {
            return None;
        }
        apply_e(&runners_of(&self.charges, b), self.modulus, i).map(partitions_of)
    }

    fn weight(&self, b: &Multipartition) -> Weight {
        weight_of(&self.datum, self.modulus, &runners_of(&self.charges, b))
    }

    fn phi(&self, i: Node, b: &Multipartition) -> usize {
        if self.datum.index(i).is_err() {
            return 0;
        }
        string_lengths(&runners_of(&self.charges, b), self.modulus, i).0
    }

    fn eps(&self, i: Node, b: &Multipartition) -> usize {
        if self.datum.index(i).is_err() {
            return 0;
        }
        string_lengths(&runners_of(&self.charges, b), self.modulus, i).1
    }
}

/// The `𝔰𝔩_∞` operator `F̃_j`, acting through the single word `W_j`.
pub fn uglov_f_infinite(j: i64, charges: &[i64], b: &[Partition]) -> Option<Multipartition> {
    apply_f(&runners_of(charges, b), Modulus::Infinite, j).map(partitions_of)
}

pub fn uglov_e_infinite(j: i64, charges: &[i64], b: &[Partition]) -> Option<Multipartition> {
    apply_e(&runners_of(charges, b), Modulus::Infinite, j).map(partitions_of)
}
