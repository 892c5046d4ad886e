use std::collections::BTreeSet;

use super::key::{keys, KeyConfig};
use super::{orbit_word, Crystal, WeightPolynomial};
use crate::error::{Error, Result};
use crate::weyl::{bruhat_leq, Node, WeylWord};

/// `B_w(λ) = {f̃_{i₁}^{k₁}⋯f̃_{i_ℓ}^{k_ℓ}(b_λ)}` by string closure along the word,
/// innermost letter first.
pub fn demazure_enumerate<C: Crystal>(c: &C, hw: &C::Vertex, w: &[Node]) -> BTreeSet<C::Vertex> {
    let mut set = BTreeSet::from([hw.clone()]);
    for &i in w.iter().rev() {
        let mut next = set.clone();
        for b in &set {
            let mut cur = b.clone();
            while let Some(n) = c.f(i, &cur) {
                next.insert(n.clone());
                cur = n;
            }
        }
        set = next;
    }
    set
}

/// Whether `b ∈ B_w(λ)`: `K^R(b) = b_{w′λ}` with `w′ ⊴ w`.
pub fn demazure_membership<C: Crystal>(
    c: &C,
    hw: &C::Vertex,
    b: &C::Vertex,
    w: &WeylWord,
    cfg: &KeyConfig,
) -> Result<bool> {
    let (_, kr) = keys(c, hw, b, cfg)?;
    let w2 = orbit_word(c, hw, &kr).ok_or(Error::NotPrincipal)?;
    bruhat_leq(c.datum(), &w2, w)
}

pub fn character_of<'a, C: Crystal>(c: &C, set: impl IntoIterator<Item = &'a C::Vertex>) -> WeightPolynomial
where
    C::Vertex: 'a,
{
    let mut p = WeightPolynomial::default();
    for b in set {
        p.add_term(c.weight(b), 1);
    }
    p
}
