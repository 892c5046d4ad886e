//! Multisegments, the embedding `Π_{Λ_s}` of Uglov crystals into `B(∞)`, and
//! membership tests for the image of the orbit of the empty multipartition.
//!
//! Row `i` of `λ^k` becomes the segment `[1−i+s_k ; λ^k_i−i+s_k]`. The rows of one
//! component therefore form a chain: left ends decrease by one and right ends
//! decrease strictly going down.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::affine::cores::is_es_core;
use crate::affine::partition::{multipartition_display, multipartition_rank, Multipartition, Partition};
use crate::affine::symbol::Modulus;
use crate::affine::uglov::Uglov;
use crate::crystal::demazure::demazure_membership;
use crate::crystal::key::KeyConfig;
use crate::crystal::{path_to_highest, PathChoice};
use crate::error::{Error, Result};
use crate::weyl::WeylWord;

/// The segment `[a, a+1, …, b]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[i64; 2]", try_from = "[i64; 2]")]
pub struct Segment {
    a: i64,
    b: i64,
}

impl Segment {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a > b {
            return Err(Error::Invalid(format!("[{a};{b}] is not a segment")));
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn len(&self) -> usize {
        (self.b - self.a + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<Segment> for [i64; 2] {
    fn from(s: Segment) -> Self {
        [s.a, s.b]
    }
}

impl TryFrom<[i64; 2]> for Segment {
    type Error = Error;
    fn try_from(p: [i64; 2]) -> Result<Self> {
        Segment::new(p[0], p[1])
    }
}

/// Canonical order: right end, then left end.
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.b, self.a).cmp(&(other.b, other.a))
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{}]", self.a, self.b)
    }
}

impl FromStr for Segment {
    type Err = Error;

    /// `[a;b]`, `[a,b]` or `[a]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("bad segment {s:?}"));
        let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let ends: Vec<i64> =
            inner.split([';', ',']).map(|x| x.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<_>>()?;
        match ends[..] {
            [a] => Segment::new(a, a),
            [a, b] => Segment::new(a, b),
            _ => Err(bad()),
        }
    }
}

/// A multiset of segments, kept in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multisegment(Vec<Segment>);

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Self {
        segments.sort();
        Multisegment(segments)
    }

    pub fn empty() -> Self {
        Multisegment(Vec::new())
    }

    pub fn segments(&self) -> &[Segment] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn insert(&mut self, s: Segment) {
        let k = self.0.partition_point(|x| x <= &s);
        self.0.insert(k, s);
    }

    /// Every segment satisfies `1 ≤ a ≤ b ≤ e−1`.
    pub fn in_finite_class(&self, e: usize) -> bool {
        self.0.iter().all(|s| 1 <= s.a && s.b < e as i64)
    }

    /// Groups by right end, increasing; left ends increasing inside a group.
    fn groups(&self) -> Vec<(i64, Vec<i64>)> {
        let mut out: Vec<(i64, Vec<i64>)> = Vec::new();
        for s in &self.0 {
            match out.last_mut() {
                Some((b, v)) if *b == s.b => v.push(s.a),
                _ => out.push((s.b, vec![s.a])),
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(Segment::to_string).collect();
        write!(f, "{}", s.join("+"))
    }
}

impl FromStr for Multisegment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Multisegment::empty());
        }
        Ok(Multisegment::new(s.split('+').map(str::parse).collect::<Result<_>>()?))
    }
}

/// For every length some residue class of right ends is missing.
pub fn is_aperiodic(m: &Multisegment, e: usize) -> bool {
    let mut seen: std::collections::BTreeMap<usize, BTreeSet<i64>> = Default::default();
    for s in m.segments() {
        seen.entry(s.len()).or_default().insert(s.b.rem_euclid(e as i64));
    }
    seen.values().all(|r| r.len() < e)
}

/// `Π_{Λ_s}(λ)`.
pub fn pi_embed(lambda: &[Partition], s: &[i64]) -> Result<Multisegment> {
    if lambda.len() != s.len() {
        return Err(Error::ShapeMismatch);
    }
    let mut out = Vec::new();
    for (p, &c) in lambda.iter().zip(s) {
        for (r, &part) in p.parts().iter().enumerate() {
            let i = r as i64 + 1;
            out.push(Segment::new(1 - i + c, part as i64 - i + c)?);
        }
    }
    Ok(Multisegment::new(out))
}

/// The lists `(L_1,…,L_l)` after each group of segments.
pub type Stage = Vec<Vec<Segment>>;

/// How a membership was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// The list construction on groups of segments.
    Lists,
    /// Exhaustive search of the preimages.
    Search,
}

/// A multipartition `λ` in the orbit with `Π_{Λ_t}(λ) = m` and `t = s + δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub lambda: Multipartition,
    pub charges: Vec<i64>,
    pub stages: Vec<Stage>,
    pub method: Method,
}

impl Membership {
    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda,
            "display": multipartition_display(&self.lambda),
            "charges": self.charges,
            "method": self.method,
            "stages": self.stages,
        })
    }
}

/// The list construction. Returns the stages, or the stages built before it stopped.
pub fn build_lists(m: &Multisegment, l: usize) -> std::result::Result<Vec<Stage>, Vec<Stage>> {
    let mut lists: Stage = vec![Vec::new(); l];
    let mut stages = Vec::new();
    for (b, a_s) in m.groups().into_iter().rev() {
        let r = a_s.len();
        if r > l {
            return Err(stages);
        }
        for (k, &a) in a_s.iter().enumerate() {
            let target = &mut lists[l - r + k];
            let ok = match target.first() {
                None => true,
                Some(f) => f.a == a + 1 && f.b > b,
            };
            if !ok {
                return Err(stages);
            }
            target.insert(0, Segment { a, b });
        }
        stages.push(lists.clone());
    }
    Ok(stages)
}

/// Reads `λ^k` and its charge off a chain of segments (left ends increasing).
fn chain_component(list: &[Segment]) -> (Partition, Option<i64>) {
    let rows: Vec<usize> = list.iter().rev().map(|s| s.len()).collect();
    (Partition::new(rows).expect("chains have decreasing rows"), list.last().map(|s| s.a))
}

fn gate(m: &Multisegment, lambda: &[Partition], t: &[i64], modulus: Modulus) -> bool {
    is_es_core(lambda, modulus, t).unwrap_or(false) && pi_embed(lambda, t).as_ref() == Ok(m)
}

fn shift_allowed(delta: i64, modulus: Modulus) -> bool {
    match modulus {
        Modulus::Finite(e) => delta.rem_euclid(e as i64) == 0,
        Modulus::Infinite => true,
    }
}

fn check_class(m: &Multisegment, modulus: Modulus) -> Result<()> {
    if let Modulus::Finite(e) = modulus {
        if !is_aperiodic(m, e) {
            return Err(Error::Invalid(format!("{m} is not aperiodic for e = {e}")));
        }
    }
    Ok(())
}

/// The list construction with the charge test `s_i − s_j = p_i − p_j`.
/// On success `λ` is an `(e,t)`-core with `t = s + δ` and `Π_{Λ_t}(λ) = m`.
pub fn orbit_membership_lists(m: &Multisegment, modulus: Modulus, s: &[i64]) -> Result<Membership> {
    check_class(m, modulus)?;
    let l = s.len();
    let stages = build_lists(m, l).map_err(|_| Error::NotInOrbit)?;
    let last = stages.last().cloned().unwrap_or_else(|| vec![Vec::new(); l]);
    let p: Vec<i64> = last.iter().map(|x| x.len() as i64).collect();
    if (0..l).any(|i| s[i] - p[i] != s[0] - p[0]) {
        return Err(Error::NotInOrbit);
    }
    let comps: Vec<(Partition, Option<i64>)> = last.iter().map(|x| chain_component(x)).collect();
    let delta = comps.iter().zip(s).find_map(|((_, top), &c)| top.map(|t| t - c)).unwrap_or(0);
    let t: Vec<i64> = s.iter().map(|c| c + delta).collect();
    let lambda: Multipartition = comps.into_iter().map(|(p, _)| p).collect();
    if !shift_allowed(delta, modulus) || !gate(m, &lambda, &t, modulus) {
        return Err(Error::NotInOrbit);
    }
    Ok(Membership { lambda, charges: t, stages, method: Method::Lists })
}

/// Every `λ` with `Π_{Λ_t}(λ) = m`, by assigning segments to chains.
pub fn preimages(m: &Multisegment, t: &[i64]) -> Vec<Multipartition> {
    fn go(
        segs: &[Segment],
        used: &mut Vec<bool>,
        t: &[i64],
        k: usize,
        chains: &mut Vec<Vec<Segment>>,
        out: &mut Vec<Multipartition>,
    ) {
        if k == t.len() {
            if used.iter().all(|&u| u) {
                out.push(
                    chains.iter().map(|c| chain_component(&c.iter().rev().copied().collect::<Vec<_>>()).0).collect(),
                );
            }
            return;
        }
        go(segs, used, t, k + 1, chains, out);
        let row = chains[k].len() as i64;
        let a = t[k] - row;
        let mut tried = BTreeSet::new();
        for j in 0..segs.len() {
            let s = segs[j];
            if used[j] || s.a != a || !tried.insert(s) {
                continue;
            }
            if chains[k].last().is_some_and(|p| p.b <= s.b) {
                continue;
            }
            used[j] = true;
            chains[k].push(s);
            go(segs, used, t, k, chains, out);
            chains[k].pop();
            used[j] = false;
        }
    }
    let segs = m.segments();
    let mut out = Vec::new();
    let mut used = vec![false; segs.len()];
    let mut chains = vec![Vec::new(); t.len()];
    go(segs, &mut used, t, 0, &mut chains, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Exact membership: the list construction, then a search over shifts `δ` (multiples
/// of `e` for finite `e`) and preimages, smallest `|δ|` first.
pub fn orbit_membership(m: &Multisegment, modulus: Modulus, s: &[i64]) -> Result<Membership> {
    if let Ok(found) = orbit_membership_lists(m, modulus, s) {
        return Ok(found);
    }
    check_class(m, modulus)?;
    let mut deltas: Vec<i64> = m
        .segments()
        .iter()
        .flat_map(|seg| s.iter().map(move |c| seg.a - c))
        .chain([0])
        .filter(|&d| shift_allowed(d, modulus))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    deltas.sort_by_key(|d| (d.abs(), *d));
    for d in deltas {
        let t: Vec<i64> = s.iter().map(|c| c + d).collect();
        if let Some(lambda) = preimages(m, &t).into_iter().find(|lam| gate(m, lam, &t, modulus)) {
            return Ok(Membership { lambda, charges: t, stages: Vec::new(), method: Method::Search });
        }
    }
    Err(Error::NotInOrbit)
}

/// A multicharge read off the list construction, normalized with `s₁ = 0`, together
/// with the charges `t` realizing `Π_{Λ_t}(λ) = m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnyCharge {
    pub normalized: Vec<i64>,
    pub membership: Membership,
}

pub fn orbit_membership_any_charge(m: &Multisegment, modulus: Modulus, l: usize) -> Result<AnyCharge> {
    if l == 0 {
        return Err(Error::Invalid("level must be positive".into()));
    }
    let stages = build_lists(m, l).map_err(|_| Error::NotInOrbit)?;
    let p: Vec<i64> = stages.last().map(|x| x.iter().map(|y| y.len() as i64).collect()).unwrap_or_else(|| vec![0; l]);
    let normalized: Vec<i64> = p.iter().map(|x| x - p[0]).collect();
    let mut candidates = vec![normalized.clone()];
    if let Modulus::Finite(e) = modulus {
        // A shift of the whole multicharge must preserve residues.
        if let Some(top) =
            stages.last().and_then(|x| x.iter().zip(&normalized).find_map(|(c, n)| c.last().map(|s| s.a - n)))
        {
            let base: Vec<i64> = normalized.iter().map(|n| n + top.rem_euclid(e as i64)).collect();
            candidates = vec![base];
        }
    }
    let membership = orbit_membership_lists(m, modulus, &candidates[0])?;
    Ok(AnyCharge { normalized, membership })
}

/// Restricted Demazure membership in `B(∞)`: `m` must be `Π_{Λ_s}(b)` for `b` in the
/// component of the empty multipartition of the Uglov crystal at `s`; the answer is
/// whether `b ∈ B_w(Λ_s)`.
pub fn binfty_demazure_membership(m: &Multisegment, w: &WeylWord, s: &[i64], modulus: Modulus) -> Result<bool> {
    let rank: usize = m.segments().iter().map(Segment::len).sum();
    let crystal = Uglov::new(modulus, s, rank)?;
    let hw = crystal.empty();
    let b = preimages(m, s)
        .into_iter()
        .find(|lam| multipartition_rank(lam) == rank && path_to_highest(&crystal, lam, PathChoice::Smallest).0 == hw)
        .ok_or(Error::NotInOrbit)?;
    demazure_membership(&crystal, &hw, &b, w, &KeyConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::cores::cores_up_to;
    use crate::affine::partition::{multipartitions_up_to, parse_multipartition, partitions_up_to};
    use crate::affine::symbol::{LevelOne, Symbol};
    use crate::crystal::graph::CrystalGraph;
    use crate::crystal::{orbit, Crystal};

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    fn worked() -> Multisegment {
        ms("[2]+[3]+[2,3]+[2,3]+[4]+[3,4]+[5,6]+[6,7]+[4,7]+[7,9]+[5,9]+[3,9]")
    }

    #[test]
    fn segments_and_order() {
        let m = ms("[4;6]+[3;4]+[2;3]+[5;7]+[4;4]");
        assert_eq!(m.to_string(), "[2;3]+[3;4]+[4;4]+[4;6]+[5;7]");
        assert_eq!(m.to_json(), json!([[2, 3], [3, 4], [4, 4], [4, 6], [5, 7]]));
        let mut n = Multisegment::empty();
        for s in m.segments().iter().rev() {
            n.insert(*s);
        }
        assert_eq!(n, m);
        assert!("[3;2]".parse::<Segment>().is_err());
        assert!(m.in_finite_class(8) && !m.in_finite_class(7));
    }

    #[test]
    fn aperiodicity() {
        assert!(is_aperiodic(&Multisegment::empty(), 2));
        assert!(!is_aperiodic(&ms("[1;1]+[2;2]"), 2));
        assert!(is_aperiodic(&ms("[1;1]"), 2));
        assert!(is_aperiodic(&ms("[1;1]+[2;3]"), 2));
    }

    #[test]
    fn embedding_example() {
        let lam = parse_multipartition("3.2.2|3.1").unwrap();
        assert_eq!(pi_embed(&lam, &[4, 5]).unwrap(), ms("[4;6]+[3;4]+[2;3]+[5;7]+[4;4]"));
        assert!(pi_embed(&[Partition::empty(), Partition::empty()], &[0, 3]).unwrap().is_empty());
    }

    #[test]
    fn embedding_is_injective() {
        let s = [0, 2];
        let u = Uglov::new(Modulus::Infinite, &s, 5).unwrap();
        let all = CrystalGraph::generate(&u, &u.empty(), Some(5)).vertices;
        assert!(all.len() > 20);
        let images: BTreeSet<Multisegment> = all.iter().map(|l| pi_embed(l, &s).unwrap()).collect();
        assert_eq!(images.len(), all.len());
        for l in &all {
            assert!(preimages(&pi_embed(l, &s).unwrap(), &s).contains(l));
        }
    }

    #[test]
    fn worked_example_stages() {
        let got = orbit_membership_lists(&worked(), Modulus::Infinite, &[0, 2, 4]).unwrap();
        assert_eq!(got.lambda, parse_multipartition("7.2|5.4.2.2|3.2.2.1.1.1").unwrap());
        assert_eq!(got.charges, vec![3, 5, 7]);
        let stage = |lists: [&str; 3]| -> Stage {
            lists.iter().map(|x| ms(x).segments().iter().rev().copied().rev().collect()).collect()
        };
        let want = [
            stage(["[3,9]", "[5,9]", "[7,9]"]),
            stage(["[3,9]", "[4,7]+[5,9]", "[6,7]+[7,9]"]),
            stage(["[3,9]", "[4,7]+[5,9]", "[5,6]+[6,7]+[7,9]"]),
            stage(["[3,9]", "[3,4]+[4,7]+[5,9]", "[4]+[5,6]+[6,7]+[7,9]"]),
            stage(["[2,3]+[3,9]", "[2,3]+[3,4]+[4,7]+[5,9]", "[3]+[4]+[5,6]+[6,7]+[7,9]"]),
            stage(["[2,3]+[3,9]", "[2,3]+[3,4]+[4,7]+[5,9]", "[2]+[3]+[4]+[5,6]+[6,7]+[7,9]"]),
        ];
        assert_eq!(got.stages, want);
        assert_eq!(pi_embed(&got.lambda, &got.charges).unwrap(), worked());
        let any = orbit_membership_any_charge(&worked(), Modulus::Infinite, 3).unwrap();
        assert_eq!(any.normalized, vec![0, 2, 4]);
    }

    #[test]
    fn equal_segments_are_order_insensitive() {
        let m = worked();
        let mut segs = m.segments().to_vec();
        segs.reverse();
        assert_eq!(Multisegment::new(segs), m);
    }

    #[test]
    fn round_trip_on_cores() {
        for s in [vec![0, 2, 4], vec![0, 1], vec![1, 1], vec![3, 0]] {
            for lam in cores_up_to(Modulus::Infinite, &s, 5) {
                let m = pi_embed(&lam, &s).unwrap();
                let got = orbit_membership(&m, Modulus::Infinite, &s).unwrap();
                assert_eq!(pi_embed(&got.lambda, &got.charges).unwrap(), m);
                assert!(is_es_core(&got.lambda, Modulus::Infinite, &got.charges).unwrap());
                if got.charges == s {
                    assert_eq!(got.lambda, lam);
                }
            }
        }
        let lam = parse_multipartition("1|∅|∅").unwrap();
        let m = pi_embed(&lam, &[0, 2, 4]).unwrap();
        assert!(orbit_membership_lists(&m, Modulus::Infinite, &[0, 2, 4]).is_err());
        let got = orbit_membership(&m, Modulus::Infinite, &[0, 2, 4]).unwrap();
        assert_eq!((got.lambda, got.charges, got.method), (lam, vec![0, 2, 4], Method::Search));
    }

    #[test]
    fn never_accepts_non_cores() {
        let s = [0, 1];
        for lam in multipartitions_up_to(2, 4) {
            let m = pi_embed(&lam, &s).unwrap();
            if let Ok(got) = orbit_membership(&m, Modulus::Infinite, &s) {
                assert!(is_es_core(&got.lambda, Modulus::Infinite, &got.charges).unwrap());
            }
            if !is_aperiodic(&m, 3) {
                continue;
            }
            if let Ok(got) = orbit_membership(&m, Modulus::Finite(3), &s) {
                assert!(is_es_core(&got.lambda, Modulus::Finite(3), &got.charges).unwrap());
            }
        }
        for lam in cores_up_to(Modulus::Finite(3), &s, 5) {
            let m = pi_embed(&lam, &s).unwrap();
            let got = orbit_membership(&m, Modulus::Finite(3), &s).unwrap();
            assert_eq!(pi_embed(&got.lambda, &got.charges).unwrap(), m);
        }
    }

    #[test]
    fn prefix_violations_are_rejected() {
        assert!(matches!(
            orbit_membership_any_charge(&ms("[1;2]+[1;3]+[1;4]"), Modulus::Infinite, 2),
            Err(Error::NotInOrbit)
        ));
        assert!(orbit_membership_any_charge(&ms("[0;1]+[0;3]"), Modulus::Infinite, 2).is_err());
        let e = orbit_membership_any_charge(&Multisegment::empty(), Modulus::Infinite, 2).unwrap();
        assert_eq!(e.normalized, vec![0, 0]);
        assert_eq!(e.membership.lambda, vec![Partition::empty(); 2]);
    }

    #[test]
    fn demazure_membership_through_multisegments() {
        let c = LevelOne::infinite(-7, 7).unwrap();
        let hw = Symbol::empty(0);
        let o = orbit(&c, &hw, Some(5));
        for lam in partitions_up_to(5) {
            let b = Symbol::new(0, lam.clone());
            let m = pi_embed(std::slice::from_ref(&lam), &[0]).unwrap();
            for (w, _) in o.iter().filter(|(w, _)| w.length() <= 3) {
                let direct = demazure_membership(&c, &hw, &b, w, &KeyConfig::default()).unwrap();
                assert_eq!(binfty_demazure_membership(&m, w, &[0], Modulus::Infinite).unwrap(), direct);
            }
        }
        let u = Uglov::affine(3, &[0, 1]).unwrap();
        let g = CrystalGraph::generate(&u, &u.empty(), Some(3));
        for v in &g.vertices {
            let m = pi_embed(v, &[0, 1]).unwrap();
            let w = WeylWord::new(u.datum(), &[0, 1, 2, 0]).unwrap();
            let direct = demazure_membership(&u, &u.empty(), v, &w, &KeyConfig::default()).unwrap();
            assert_eq!(binfty_demazure_membership(&m, &w, &[0, 1], Modulus::Finite(3)).unwrap(), direct);
        }
        assert!(binfty_demazure_membership(&Multisegment::empty(), &WeylWord::identity(), &[0, 1], Modulus::Finite(3))
            .unwrap());
    }
}
