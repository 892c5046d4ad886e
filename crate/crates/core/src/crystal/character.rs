use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::Result;
use crate::weyl::{CartanDatum, Node, Weight};

/// A finitely supported element of `ℤ[P]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightPolynomial {
    terms: BTreeMap<Weight, i64>,
}

impl WeightPolynomial {
    pub fn monomial(w: Weight) -> Self {
        let mut p = Self::default();
        p.add_term(w, 1);
        p
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn add(&mut self, other: &WeightPolynomial) {
        for (w, &c) in &other.terms {
            self.add_term(w.clone(), c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Sum of all coefficients (the value at `e^β = 1`).
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "demazure/weight-polynomial@1",
            "terms": self.terms.iter().map(|(w, c)| json!({
                "weight": w.pairings,
                "degree": w.degree,
                "coefficient": c,
            })).collect::<Vec<_>>(),
        })
    }
}

/// The Demazure operator `D_i` on a single monomial `e^µ`.
pub fn demazure_operator_monomial(d: &CartanDatum, i: Node, mu: &Weight) -> Result<WeightPolynomial> {
    let k = mu.pairing(d, i)?;
    let alpha = Weight::simple_root(d, i)?;
    let mut p = WeightPolynomial::default();
    if k >= 0 {
        for t in 0..=k {
            p.add_term(mu.sub(&alpha.scale(t)), 1);
        }
    } else if k <= -2 {
        for t in 1..=(-k - 1) {
            p.add_term(mu.add(&alpha.scale(t)), -1);
        }
    }
    Ok(p)
}

pub fn demazure_operator(d: &CartanDatum, i: Node, p: &WeightPolynomial) -> Result<WeightPolynomial> {
    let mut out = WeightPolynomial::default();
    for (mu, &c) in p.terms() {
        for (nu, &c2) in demazure_operator_monomial(d, i, mu)?.terms() {
            out.add_term(nu.clone(), c * c2);
        }
    }
    Ok(out)
}

/// `D_w(e^λ) = D_{i₁}⋯D_{i_ℓ}(e^λ)`.
pub fn demazure_character(d: &CartanDatum, lambda: &Weight, w: &[Node]) -> Result<WeightPolynomial> {
    let mut p = WeightPolynomial::monomial(lambda.clone());
    for &i in w.iter().rev() {
        p = demazure_operator(d, i, &p)?;
    }
    Ok(p)
}
