//! Type `C_n`: admissible columns, split form, column keys, Kashiwara–Nakashima
//! tableaux. Barred letters `k̄` are stored as `-k`.

use crate::crystal::key::{key_left_reduced, key_right_reduced, PathTransport};
use crate::error::{Error, Result};
use crate::tableau::{is_semistandard, Alphabet, Letter, Sign, Tableau, TableauCrystal};
use crate::weyl::{CartanDatum, Node, Weight};

/// The alphabet `1 < ⋯ < n < n̄ < ⋯ < 1̄` of `B(ω₁)`.
#[derive(Clone, Debug)]
pub struct Symplectic {
    n: usize,
    d: CartanDatum,
}

impl Symplectic {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Symplectic { n, d: CartanDatum::finite_c(n)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl Alphabet for Symplectic {
    fn datum(&self) -> &CartanDatum {
        &self.d
    }

    fn sign(&self, i: Node, x: Letter) -> Sign {
        let n = self.n as i64;
        let x = i64::from(x);
        if i == n {
            return match x {
                _ if x == n => Sign::Plus,
                _ if x == -n => Sign::Minus,
                _ => Sign::Zero,
            };
        }
        if x == i || x == -(i + 1) {
            Sign::Plus
        } else if x == i + 1 || x == -i {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    fn lower(&self, i: Node, x: Letter) -> Letter {
        if i == self.n as i64 {
            -x
        } else {
            x + 1
        }
    }

    fn raise(&self, i: Node, x: Letter) -> Letter {
        if i == self.n as i64 {
            -x
        } else {
            x - 1
        }
    }

    fn letter_weight(&self, x: Letter) -> Weight {
        let n = self.n;
        let mut eps = vec![0i64; n + 1];
        if x > 0 {
            eps[x as usize] = 1;
        } else {
            eps[(-x) as usize] = -1;
        }
        let mut pairings: Vec<i64> = (1..n).map(|i| eps[i] - eps[i + 1]).collect();
        pairings.push(eps[n]);
        Weight { pairings, degree: 0 }
    }

    fn rank_of(&self, x: Letter) -> i64 {
        if x > 0 {
            i64::from(x)
        } else {
            2 * self.n as i64 + 1 + i64::from(x)
        }
    }

    fn contains(&self, x: Letter) -> bool {
        x != 0 && x.unsigned_abs() as usize <= self.n
    }

    fn display(&self, x: Letter) -> String {
        if x > 0 {
            x.to_string()
        } else {
            format!("{}\u{304}", -x)
        }
    }
}

pub type KnCrystal = TableauCrystal<Symplectic>;

pub fn crystal(n: usize) -> Result<KnCrystal> {
    Ok(TableauCrystal::new(Symplectic::new(n)?))
}

fn sorted(alphabet: &Symplectic, mut col: Vec<Letter>) -> Vec<Letter> {
    col.sort_by_key(|&x| alphabet.rank_of(x));
    col
}

/// `(lC, rC)`; fails when the column is not admissible.
pub fn split_column(alphabet: &Symplectic, col: &[Letter]) -> Result<(Vec<Letter>, Vec<Letter>)> {
    let valid = col.iter().all(|&x| alphabet.contains(x))
        && col.windows(2).all(|w| alphabet.rank_of(w[0]) < alphabet.rank_of(w[1]));
    if !valid {
        return Err(Error::Invalid(format!("{col:?} is not a symplectic column")));
    }
    let mut pairs: Vec<Letter> = col.iter().copied().filter(|&z| z > 0 && col.contains(&-z)).collect();
    pairs.sort_unstable_by(|a, b| b.cmp(a));
    let mut left = col.to_vec();
    let mut right = col.to_vec();
    let mut bound = Letter::MAX;
    for &z in &pairs {
        let top = bound.min(z);
        let t = (1..top)
            .rev()
            .find(|t| !col.contains(t) && !col.contains(&-t))
            .ok_or_else(|| Error::Inadmissible(col.to_vec()))?;
        bound = t;
        for x in left.iter_mut() {
            if *x == z {
                *x = t;
            }
        }
        for x in right.iter_mut() {
            if *x == -z {
                *x = -t;
            }
        }
    }
    Ok((sorted(alphabet, left), sorted(alphabet, right)))
}

pub fn is_admissible(alphabet: &Symplectic, col: &[Letter]) -> bool {
    split_column(alphabet, col).is_ok()
}

/// `(K^L(C), K^R(C)) = (lC, rC)`.
pub fn column_keys(alphabet: &Symplectic, col: &[Letter]) -> Result<(Vec<Letter>, Vec<Letter>)> {
    split_column(alphabet, col)
}

/// `spl(T) = lC₁ rC₁ ⋯ lC_l rC_l`.
pub fn split_form(alphabet: &Symplectic, t: &Tableau) -> Result<Tableau> {
    let mut cols = Vec::new();
    for c in t.columns() {
        let (l, r) = split_column(alphabet, c)?;
        cols.push(l);
        cols.push(r);
    }
    Ok(Tableau::from_columns(cols))
}

/// Every column admissible and the split form semistandard.
pub fn is_type_c_tableau(alphabet: &Symplectic, t: &Tableau) -> bool {
    split_form(alphabet, t).is_ok_and(|s| is_semistandard(alphabet, &s))
}

fn column_highest(t: &Tableau) -> Vec<Tableau> {
    t.columns().iter().map(|c| Tableau::column((1..=c.len() as Letter).collect())).collect()
}

/// Right key through R-matrices (path transport) and column keys.
pub fn key_right(c: &KnCrystal, t: &Tableau) -> Result<Tableau> {
    let fund = |x: &Tableau, _: &Tableau| Ok(Tableau::column(column_keys(&c.alphabet, &x.columns()[0])?.1));
    let parts = key_right_reduced(&column_highest(t), &t.split_columns(), &PathTransport(c), &fund)?;
    Ok(Tableau::join_columns(&parts))
}

pub fn key_left(c: &KnCrystal, t: &Tableau) -> Result<Tableau> {
    let fund = |x: &Tableau, _: &Tableau| Ok(Tableau::column(column_keys(&c.alphabet, &x.columns()[0])?.0));
    let parts = key_left_reduced(&column_highest(t), &t.split_columns(), &PathTransport(c), &fund)?;
    Ok(Tableau::join_columns(&parts))
}

fn pair_free(col: &[Letter]) -> bool {
    col.iter().all(|&z| !col.contains(&-z))
}

/// Orbit vertices: nested columns without a pair `(z, z̄)`.
pub fn orbit_test(t: &Tableau) -> bool {
    t.columns().iter().all(|c| pair_free(c)) && t.columns().windows(2).all(|w| w[1].iter().all(|x| w[0].contains(x)))
}

/// Bruhat order on orbit tableaux: every juxtaposition `C_k C′_k` is semistandard.
pub fn tableau_bruhat(alphabet: &Symplectic, t: &Tableau, t2: &Tableau) -> Result<bool> {
    if t.heights() != t2.heights() {
        return Err(Error::ShapeMismatch);
    }
    Ok(t.columns()
        .iter()
        .zip(t2.columns())
        .all(|(a, b)| a.iter().zip(b).all(|(&x, &y)| alphabet.rank_of(x) <= alphabet.rank_of(y))))
}
