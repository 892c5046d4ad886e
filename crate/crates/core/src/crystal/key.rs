//! Dilatation, Key maps and combinatorial R-matrices.

use super::{f_pow, is_extremal, orbit_word, path_to_highest, replay, Crystal, PathChoice, Tensor};
use crate::error::{Error, Result};
use crate::weyl::{bruhat_leq, WeylWord};

/// Values of `m` tried when looking for a dilatation with extremal factors:
/// `lcm(1,…,n)` for increasing `n`.
pub const DEFAULT_SCHEDULE: [usize; 9] = [1, 2, 6, 12, 60, 420, 840, 2520, 27720];

#[derive(Clone, Debug)]
pub struct KeyConfig {
    pub schedule: Vec<usize>,
    pub path: PathChoice,
}

impl Default for KeyConfig {
    fn default() -> Self {
        KeyConfig { schedule: DEFAULT_SCHEDULE.to_vec(), path: PathChoice::Smallest }
    }
}

/// `K_m(b)`: lifts a path `b = f̃_{i₁}⋯f̃_{i_r}(b_λ)` to
/// `f̃_{i₁}^m⋯f̃_{i_r}^m(b_λ^{⊗m})`.
pub fn dilatation<C: Crystal>(
    c: &C,
    hw: &C::Vertex,
    b: &C::Vertex,
    m: usize,
    choice: PathChoice,
) -> Result<Vec<C::Vertex>> {
    if m == 0 {
        return Err(Error::Invalid("dilatation needs m ≥ 1".into()));
    }
    let (top, seq) = path_to_highest(c, b, choice);
    if &top != hw {
        return Err(Error::NotPrincipal);
    }
    let t = Tensor::new(c);
    let mut cur = vec![hw.clone(); m];
    for &i in seq.iter().rev() {
        cur = f_pow(&t, i, &cur, m).ok_or_else(|| Error::Invalid("dilated path left the tensor power".into()))?;
    }
    Ok(cur)
}

fn all_extremal<C: Crystal>(c: &C, hw: &C::Vertex, factors: &[C::Vertex]) -> bool {
    let lambda = c.weight(hw);
    let mut checked: Vec<&C::Vertex> = Vec::new();
    for x in factors {
        if checked.contains(&x) {
            continue;
        }
        if !is_extremal(c, &lambda, x) {
            return false;
        }
        checked.push(x);
    }
    true
}

/// The first `K_m(b)` along the schedule whose factors are all extremal.
pub fn stable_dilatation<C: Crystal>(c: &C, hw: &C::Vertex, b: &C::Vertex, cfg: &KeyConfig) -> Result<Vec<C::Vertex>> {
    for &m in &cfg.schedule {
        let k = dilatation(c, hw, b, m, cfg.path)?;
        if all_extremal(c, hw, &k) {
            return Ok(k);
        }
    }
    Err(Error::ScheduleExhausted(cfg.schedule.last().copied().unwrap_or(0)))
}

/// `(K^L(b), K^R(b))` by dilatation.
pub fn keys<C: Crystal>(c: &C, hw: &C::Vertex, b: &C::Vertex, cfg: &KeyConfig) -> Result<(C::Vertex, C::Vertex)> {
    let k = stable_dilatation(c, hw, b, cfg)?;
    Ok((k[0].clone(), k[k.len() - 1].clone()))
}

pub fn key_right<C: Crystal>(c: &C, hw: &C::Vertex, b: &C::Vertex) -> Result<C::Vertex> {
    Ok(keys(c, hw, b, &KeyConfig::default())?.1)
}

pub fn key_left<C: Crystal>(c: &C, hw: &C::Vertex, b: &C::Vertex) -> Result<C::Vertex> {
    Ok(keys(c, hw, b, &KeyConfig::default())?.0)
}

/// Orbit words of the distinct factors of a stable dilatation, in order.
/// They form a Bruhat chain.
pub fn dilatation_factor_words<C: Crystal>(c: &C, hw: &C::Vertex, factors: &[C::Vertex]) -> Result<Vec<WeylWord>> {
    let mut out: Vec<WeylWord> = Vec::new();
    let mut last: Option<&C::Vertex> = None;
    for x in factors {
        if last == Some(x) {
            continue;
        }
        last = Some(x);
        out.push(orbit_word(c, hw, x).ok_or(Error::NotPrincipal)?);
    }
    Ok(out)
}

pub fn is_bruhat_chain(d: &crate::weyl::CartanDatum, words: &[WeylWord]) -> Result<bool> {
    for pair in words.windows(2) {
        if !bruhat_leq(d, &pair[0], &pair[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transports `b` from the principal component of `⊗ src` to that of `⊗ dst`
/// (both lists of highest weight vertices, with the same total weight) along a
/// path through the highest weight vertex.
pub fn rmatrix_path_transport<C: Crystal>(
    c: &C,
    src: &[C::Vertex],
    dst: &[C::Vertex],
    b: &[C::Vertex],
) -> Result<Vec<C::Vertex>> {
    let t = Tensor::new(c);
    let (top, seq) = path_to_highest(&t, &b.to_vec(), PathChoice::Smallest);
    if top.as_slice() != src {
        return Err(Error::NotPrincipal);
    }
    replay(&t, &dst.to_vec(), &seq).ok_or(Error::NotPrincipal)
}

/// A combinatorial R-matrix on adjacent pairs: `u⊗v ↦ v′⊗u′` where `u ∈ B(hu)`
/// and `v ∈ B(hv)`.
pub trait RMatrix<V> {
    fn swap(&self, u: &V, v: &V, hu: &V, hv: &V) -> Result<(V, V)>;
}

/// The generic provider: path transport in `B(hu)⊗B(hv)`.
pub struct PathTransport<C>(pub C);

impl<C: Crystal> RMatrix<C::Vertex> for PathTransport<C> {
    fn swap(&self, u: &C::Vertex, v: &C::Vertex, hu: &C::Vertex, hv: &C::Vertex) -> Result<(C::Vertex, C::Vertex)> {
        if hu == hv {
            return Ok((u.clone(), v.clone()));
        }
        let out = rmatrix_path_transport(
            &self.0,
            &[hu.clone(), hv.clone()],
            &[hv.clone(), hu.clone()],
            &[u.clone(), v.clone()],
        )?;
        Ok((out[0].clone(), out[1].clone()))
    }
}

/// `K^R(b)` for `b` in the principal component of `B(λ₁)⊗⋯⊗B(λ_l)`: factor `k` is
/// carried to the last slot through R-matrices and `fund_key` is applied to it.
pub fn key_right_reduced<V: Clone>(
    hws: &[V],
    b: &[V],
    r: &dyn RMatrix<V>,
    fund_key: &dyn Fn(&V, &V) -> Result<V>,
) -> Result<Vec<V>> {
    let l = b.len();
    (0..l)
        .map(|k| {
            let mut cur = b.to_vec();
            let mut h = hws.to_vec();
            for j in k..l.saturating_sub(1) {
                let (x, y) = r.swap(&cur[j], &cur[j + 1], &h[j], &h[j + 1])?;
                cur[j] = x;
                cur[j + 1] = y;
                h.swap(j, j + 1);
            }
            fund_key(&cur[l - 1], &h[l - 1])
        })
        .collect()
}

/// `K^L(b)`, dual to [`key_right_reduced`]: factor `k` is carried to the first slot.
pub fn key_left_reduced<V: Clone>(
    hws: &[V],
    b: &[V],
    r: &dyn RMatrix<V>,
    fund_key: &dyn Fn(&V, &V) -> Result<V>,
) -> Result<Vec<V>> {
    (0..b.len())
        .map(|k| {
            let mut cur = b.to_vec();
            let mut h = hws.to_vec();
            for j in (0..k).rev() {
                let (x, y) = r.swap(&cur[j], &cur[j + 1], &h[j], &h[j + 1])?;
                cur[j] = x;
                cur[j + 1] = y;
                h.swap(j, j + 1);
            }
            fund_key(&cur[0], &h[0])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::testing::Letters;

    #[test]
    fn a1_keys() {
        let t = Tensor::new(Letters::default());
        let hw = vec![1u8, 1];
        let (l, r) = keys(&t, &hw, &vec![1, 2], &KeyConfig::default()).unwrap();
        assert_eq!(l, vec![1, 1]);
        assert_eq!(r, vec![2, 2]);
        assert_eq!(dilatation(&t, &hw, &vec![1, 2], 1, PathChoice::Smallest).unwrap(), vec![vec![1, 2]]);
        let k = dilatation(&t, &hw, &vec![1, 2], 2, PathChoice::Smallest).unwrap();
        assert_eq!(k, vec![vec![1, 1], vec![2, 2]]);
    }
}
