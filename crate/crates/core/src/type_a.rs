//! Type `A_n`: semistandard tableaux, jeu de taquin R-matrices and
//! Lascoux–Schützenberger keys.

use crate::crystal::key::{key_left_reduced, key_right_reduced, RMatrix};
use crate::error::{Error, Result};
use crate::tableau::{is_semistandard, Alphabet, Letter, Sign, Tableau, TableauCrystal};
use crate::weyl::{CartanDatum, Node, Weight};

/// The letters `1,…,n+1` of `B(ω₁)` for `A_n`.
#[derive(Clone, Debug)]
pub struct TypeA {
    n: usize,
    d: CartanDatum,
}

impl TypeA {
    pub fn new(n: usize) -> Result<Self> {
        Ok(TypeA { n, d: CartanDatum::finite_a(n)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl Alphabet for TypeA {
    fn datum(&self) -> &CartanDatum {
        &self.d
    }

    fn sign(&self, i: Node, x: Letter) -> Sign {
        let x = i64::from(x);
        if x == i {
            Sign::Plus
        } else if x == i + 1 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    fn lower(&self, _i: Node, x: Letter) -> Letter {
        x + 1
    }

    fn raise(&self, _i: Node, x: Letter) -> Letter {
        x - 1
    }

    fn letter_weight(&self, x: Letter) -> Weight {
        let x = i64::from(x);
        Weight { pairings: (1..=self.n as i64).map(|i| i64::from(x == i) - i64::from(x == i + 1)).collect(), degree: 0 }
    }

    fn rank_of(&self, x: Letter) -> i64 {
        i64::from(x)
    }

    fn contains(&self, x: Letter) -> bool {
        x >= 1 && x as usize <= self.n + 1
    }
}

pub type TypeACrystal = TableauCrystal<TypeA>;

pub fn crystal(n: usize) -> Result<TypeACrystal> {
    Ok(TableauCrystal::new(TypeA::new(n)?))
}

type Grid<T> = Vec<[Option<T>; 2]>;

fn forward_slide<T: Ord + Copy>(g: &mut Grid<T>, mut r: usize, mut c: usize) {
    loop {
        let below = g.get(r + 1).and_then(|row| row[c]);
        let right = if c == 0 { g[r][1] } else { None };
        let (nr, nc) = match (below, right) {
            (None, None) => return,
            (Some(b), Some(x)) => {
                if b <= x {
                    (r + 1, c)
                } else {
                    (r, 1)
                }
            }
            (Some(_), None) => (r + 1, c),
            (None, Some(_)) => (r, 1),
        };
        g[r][c] = g[nr][nc];
        g[nr][nc] = None;
        r = nr;
        c = nc;
    }
}

fn reverse_slide<T: Ord + Copy>(g: &mut Grid<T>, mut r: usize, mut c: usize) {
    loop {
        let above = if r > 0 { g[r - 1][c] } else { None };
        let left = if c == 1 { g[r][0] } else { None };
        let (nr, nc) = match (above, left) {
            (None, None) => return,
            (Some(a), Some(l)) => {
                if a >= l {
                    (r - 1, c)
                } else {
                    (r, 0)
                }
            }
            (Some(_), None) => (r - 1, c),
            (None, Some(_)) => (r, 0),
        };
        g[r][c] = g[nr][nc];
        g[nr][nc] = None;
        r = nr;
        c = nc;
    }
}

fn read_column<T: Copy>(g: &Grid<T>, c: usize) -> Vec<T> {
    g.iter().filter_map(|row| row[c]).collect()
}

/// Rectifies the two-column configuration `c1 | c2` by jeu de taquin.
/// Returns the straight-shape columns.
pub fn rectify_two_columns<T: Ord + Copy>(c1: &[T], c2: &[T]) -> (Vec<T>, Vec<T>) {
    let (h1, h2) = (c1.len(), c2.len());
    let d = (h2.saturating_sub(h1)..=h2).find(|&d| (d..(d + h1).min(h2)).all(|r| c1[r - d] <= c2[r])).unwrap_or(h2);
    let mut g: Grid<T> = vec![[None, None]; d + h1 + h2 + 1];
    for (k, &x) in c1.iter().enumerate() {
        g[d + k][0] = Some(x);
    }
    for (k, &x) in c2.iter().enumerate() {
        g[k][1] = Some(x);
    }
    for r in (0..d).rev() {
        forward_slide(&mut g, r, 0);
    }
    (read_column(&g, 0), read_column(&g, 1))
}

/// Exchanges the heights of two columns by jeu de taquin: `c1⊗c2 ↦ c2′⊗c1′` with
/// `|c2′| = |c2|` and `|c1′| = |c1|`. Works on every connected component.
pub fn jdt_swap<T: Ord + Copy>(c1: &[T], c2: &[T]) -> (Vec<T>, Vec<T>) {
    let (h1, h2) = (c1.len(), c2.len());
    let (p1, p2) = rectify_two_columns(c1, c2);
    let mut g: Grid<T> = vec![[None, None]; h1 + h2 + 1];
    for (k, &x) in p1.iter().enumerate() {
        g[k][0] = Some(x);
    }
    for (k, &x) in p2.iter().enumerate() {
        g[k][1] = Some(x);
    }
    for k in 0..h1.saturating_sub(p2.len()) {
        reverse_slide(&mut g, p2.len() + k, 1);
    }
    let (l, r) = (read_column(&g, 0), read_column(&g, 1));
    debug_assert_eq!((l.len(), r.len()), (h2, h1));
    (l, r)
}

/// The R-matrix `B(ω_a)⊗B(ω_b) → B(ω_b)⊗B(ω_a)` on the principal component.
pub fn jdt_rmatrix(c1: &[Letter], c2: &[Letter]) -> Result<(Vec<Letter>, Vec<Letter>)> {
    let (_, p2) = rectify_two_columns(c1, c2);
    if p2.len() != c1.len().min(c2.len()) {
        return Err(Error::NotPrincipal);
    }
    Ok(jdt_swap(c1, c2))
}

/// [`jdt_rmatrix`] as an R-matrix provider on single-column tableaux.
#[derive(Clone, Copy, Debug, Default)]
pub struct JdtRMatrix;

impl RMatrix<Tableau> for JdtRMatrix {
    fn swap(&self, u: &Tableau, v: &Tableau, _hu: &Tableau, _hv: &Tableau) -> Result<(Tableau, Tableau)> {
        let (x, y) = jdt_rmatrix(&u.columns()[0], &v.columns()[0])?;
        Ok((Tableau::column(x), Tableau::column(y)))
    }
}

fn column_highest(t: &Tableau) -> Vec<Tableau> {
    t.columns().iter().map(|c| Tableau::column((1..=c.len() as Letter).collect())).collect()
}

/// Right key: columns are minuscule, so their keys are themselves; factors are
/// carried to the right by jeu de taquin.
pub fn ls_key_right(t: &Tableau) -> Result<Tableau> {
    let parts = key_right_reduced(&column_highest(t), &t.split_columns(), &JdtRMatrix, &|x, _| Ok(x.clone()))?;
    Ok(Tableau::join_columns(&parts))
}

pub fn ls_key_left(t: &Tableau) -> Result<Tableau> {
    let parts = key_left_reduced(&column_highest(t), &t.split_columns(), &JdtRMatrix, &|x, _| Ok(x.clone()))?;
    Ok(Tableau::join_columns(&parts))
}

fn subset(small: &[Letter], big: &[Letter]) -> bool {
    small.iter().all(|x| big.contains(x))
}

/// Each column of height `h` is contained in every column of height at least `h`.
pub fn is_key_tableau(t: &Tableau) -> bool {
    let cols = t.columns();
    cols.iter().all(|a| cols.iter().filter(|b| b.len() >= a.len()).all(|b| subset(a, b)))
}

/// Orbit vertices are the tableaux with `C_l ⊆ ⋯ ⊆ C₁`.
pub fn orbit_test(t: &Tableau) -> bool {
    t.columns().windows(2).all(|w| subset(&w[1], &w[0]))
}

/// `w ⊴ w′` for orbit tableaux: every juxtaposition `C_k C′_k` is semistandard.
pub fn tableau_bruhat(t: &Tableau, t2: &Tableau) -> Result<bool> {
    if t.heights() != t2.heights() {
        return Err(Error::ShapeMismatch);
    }
    Ok(t.columns().iter().zip(t2.columns()).all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y)))
}

pub fn is_valid_tableau(alphabet: &TypeA, t: &Tableau) -> bool {
    is_semistandard(alphabet, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::graph::CrystalGraph;
    use crate::crystal::key::{rmatrix_path_transport, KeyConfig};
    use crate::crystal::{Crystal, Tensor};
    use itertools::Itertools;

    /// Row insertion, for Knuth-class comparison.
    fn insertion_tableau(word: &[Letter]) -> Vec<Vec<Letter>> {
        let mut rows: Vec<Vec<Letter>> = Vec::new();
        for &x in word {
            let mut x = x;
            let mut r = 0;
            loop {
                if r == rows.len() {
                    rows.push(vec![x]);
                    break;
                }
                match rows[r].iter().position(|&y| y > x) {
                    Some(p) => {
                        std::mem::swap(&mut rows[r][p], &mut x);
                        r += 1;
                    }
                    None => {
                        rows[r].push(x);
                        break;
                    }
                }
            }
        }
        rows
    }

    fn word(cols: &[&[Letter]]) -> Vec<Letter> {
        cols.iter().flat_map(|c| c.iter().rev().copied()).collect()
    }

    #[test]
    fn single_box_and_source() {
        let c = crystal(2).unwrap();
        assert_eq!(c.f(1, &Tableau::column(vec![1])), Some(Tableau::column(vec![2])));
        let hw = c.highest_of_shape(&[2, 1]);
        for &i in c.datum().nodes() {
            assert!(c.e(i, &hw).is_none());
        }
        let g = CrystalGraph::generate(&c, &hw, None);
        assert_eq!(g.len(), 8);
        assert_eq!(g.sources(), vec![0]);
        assert!(g.vertices.iter().all(|t| is_semistandard(&c.alphabet, t)));
    }

    #[test]
    fn crystal_is_all_semistandard_tableaux() {
        // |SSYT(λ, [n+1])| by brute force vs crystal size
        let c = crystal(3).unwrap();
        for shape in [vec![2, 1], vec![2, 2], vec![3, 1, 1], vec![2, 2, 1]] {
            let g = CrystalGraph::generate(&c, &c.highest_of_shape(&shape), None);
            let cells: usize = shape.iter().sum();
            let count = (0..cells)
                .map(|_| 1..=4)
                .multi_cartesian_product()
                .filter(|fill| {
                    let mut rows = Vec::new();
                    let mut k = 0;
                    for &len in &shape {
                        rows.push(fill[k..k + len].to_vec());
                        k += len;
                    }
                    is_semistandard(&c.alphabet, &Tableau::from_rows(&rows).unwrap())
                })
                .count();
            assert_eq!(g.len(), count, "{shape:?}");
        }
    }

    #[test]
    fn jdt_agrees_with_knuth_class_everywhere() {
        let cols: Vec<Vec<Letter>> = (1..=3).flat_map(|h| (1..=4).combinations(h)).collect();
        for a in &cols {
            for b in &cols {
                let (x, y) = jdt_swap(a, b);
                assert_eq!(x.len(), b.len());
                assert!(x.windows(2).all(|w| w[0] < w[1]));
                assert!(y.windows(2).all(|w| w[0] < w[1]));
                assert_eq!(insertion_tableau(&word(&[a, b])), insertion_tableau(&word(&[&x, &y])), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn jdt_agrees_with_path_transport() {
        let c = crystal(3).unwrap();
        let t = Tensor::new(&c);
        for (h1, h2) in [(1, 2), (2, 1), (1, 3), (3, 2), (2, 3), (2, 2)] {
            let hu = Tableau::column((1..=h1).collect());
            let hv = Tableau::column((1..=h2).collect());
            let g = CrystalGraph::generate(&t, &vec![hu.clone(), hv.clone()], None);
            for b in &g.vertices {
                let pt = rmatrix_path_transport(&c, &[hu.clone(), hv.clone()], &[hv.clone(), hu.clone()], b).unwrap();
                let (x, y) = jdt_rmatrix(&b[0].columns()[0], &b[1].columns()[0]).unwrap();
                assert_eq!(vec![Tableau::column(x), Tableau::column(y)], pt);
            }
        }
        assert_eq!(jdt_rmatrix(&[2], &[1]), Err(Error::NotPrincipal));
    }

    #[test]
    fn ls_keys_match_dilatation_on_a2() {
        let c = crystal(2).unwrap();
        let hw = c.highest_of_shape(&[2, 1]);
        let g = CrystalGraph::generate(&c, &hw, None);
        for t in &g.vertices {
            let (l, r) = crate::crystal::key::keys(&c, &hw, t, &KeyConfig::default()).unwrap();
            assert_eq!(ls_key_right(t).unwrap(), r);
            assert_eq!(ls_key_left(t).unwrap(), l);
            assert!(is_key_tableau(&r) && orbit_test(&r));
        }
    }

    #[test]
    fn orbit_tableaux_are_their_own_keys() {
        let t = Tableau::from_columns(vec![vec![1, 3, 4], vec![1, 4], vec![4]]);
        assert!(orbit_test(&t));
        assert_eq!(ls_key_right(&t).unwrap(), t);
        assert_eq!(ls_key_left(&t).unwrap(), t);
    }

    #[test]
    fn rows_round_trip() {
        let t = Tableau::from_rows(&[vec![1, 2, 2], vec![3, 4, 4], vec![4, 5]]).unwrap();
        assert_eq!(t.columns(), &[vec![1, 3, 4], vec![2, 4, 5], vec![2, 4]]);
        assert_eq!(t.rows(), vec![vec![1, 2, 2], vec![3, 4, 4], vec![4, 5]]);
        assert_eq!(t.shape(), vec![3, 3, 2]);
        assert!(tableau_bruhat(&t, &Tableau::column(vec![1])).is_err());
    }
}
