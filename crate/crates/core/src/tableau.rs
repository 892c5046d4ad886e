//! Tableaux as tensor products of columns.
//!
//! A tableau with columns `C₁,…,C_l` (left to right) is the vertex `C₁⊗⋯⊗C_l`, and a
//! column with entries `c₁ < ⋯ < c_h` is `c_h⊗⋯⊗c₁`. Under the tensor rule of
//! [`crate::crystal`] the operators act through the word obtained by reading the
//! columns left to right, each from bottom to top: letters contributing to `φ_i` are
//! `+`, letters contributing to `ε_i` are `−`, each `−` cancels the nearest
//! uncancelled `+` to its right, `f̃_i` changes the rightmost free `+` and `ẽ_i` the
//! leftmost free `−`.

use std::fmt::Debug;

use serde_json::{json, Value};

use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::weyl::{CartanDatum, Node, Weight};

pub type Letter = i32;

/// Contribution of one letter to the `i`-signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

/// A crystal of single letters.
pub trait Alphabet: Clone + Debug + Send + Sync {
    fn datum(&self) -> &CartanDatum;
    fn sign(&self, i: Node, x: Letter) -> Sign;
    /// `f̃_i` on a letter with sign `Plus`.
    fn lower(&self, i: Node, x: Letter) -> Letter;
    /// `ẽ_i` on a letter with sign `Minus`.
    fn raise(&self, i: Node, x: Letter) -> Letter;
    fn letter_weight(&self, x: Letter) -> Weight;
    /// Position of the letter in the total order of the alphabet.
    fn rank_of(&self, x: Letter) -> i64;
    fn contains(&self, x: Letter) -> bool;
    fn display(&self, x: Letter) -> String {
        x.to_string()
    }
}

/// A column-major tableau; columns are top-aligned and may have any heights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    columns: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn from_columns(columns: Vec<Vec<Letter>>) -> Self {
        Tableau { columns }
    }

    /// Builds a straight-shape tableau from its rows (top row first).
    pub fn from_rows(rows: &[Vec<Letter>]) -> Result<Self> {
        for w in rows.windows(2) {
            if w[1].len() > w[0].len() {
                return Err(Error::Invalid("row lengths must weakly decrease".into()));
            }
        }
        let width = rows.first().map_or(0, Vec::len);
        let columns = (0..width).map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()).collect();
        Ok(Tableau { columns })
    }

    pub fn column(entries: Vec<Letter>) -> Self {
        Tableau { columns: vec![entries] }
    }

    pub fn columns(&self) -> &[Vec<Letter>] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Vec<Letter>> {
        self.columns
    }

    pub fn heights(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    pub fn is_straight(&self) -> bool {
        self.columns.windows(2).all(|w| w[0].len() >= w[1].len())
    }

    pub fn rows(&self) -> Vec<Vec<Letter>> {
        let h = self.columns.iter().map(Vec::len).max().unwrap_or(0);
        (0..h).map(|r| self.columns.iter().filter(|c| c.len() > r).map(|c| c[r]).collect()).collect()
    }

    /// Shape as a partition (row lengths), for straight tableaux.
    pub fn shape(&self) -> Vec<usize> {
        self.rows().iter().map(Vec::len).collect()
    }

    /// Reading word: columns left to right, each bottom to top.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.columns.iter().flat_map(|c| c.iter().rev().copied()).collect()
    }

    /// The single-column factors `C₁,…,C_l`.
    pub fn split_columns(&self) -> Vec<Tableau> {
        self.columns.iter().map(|c| Tableau::column(c.clone())).collect()
    }

    pub fn join_columns(parts: &[Tableau]) -> Tableau {
        Tableau { columns: parts.iter().flat_map(|t| t.columns.iter().cloned()).collect() }
    }

    pub fn to_json_rows(&self) -> Value {
        json!(self.rows())
    }

    pub fn to_json_columns(&self) -> Value {
        json!(self.columns)
    }

    /// Grid layout, one box per entry.
    pub fn pretty<A: Alphabet>(&self, alphabet: &A) -> String {
        let cells: Vec<Vec<String>> =
            self.rows().iter().map(|r| r.iter().map(|&x| alphabet.display(x)).collect()).collect();
        let width = cells
            .iter()
            .flatten()
            .map(|s| s.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in cells {
            out.push('|');
            for c in row {
                let visible = c.chars().filter(|ch| !('\u{300}'..='\u{36f}').contains(ch)).count();
                out.push(' ');
                out.push_str(&" ".repeat(width - visible));
                out.push_str(&c);
                out.push_str(" |");
            }
            out.push('\n');
        }
        out
    }
}

/// Columns strictly increasing, rows weakly increasing, straight shape.
pub fn is_semistandard<A: Alphabet>(alphabet: &A, t: &Tableau) -> bool {
    if !t.is_straight() {
        return false;
    }
    let cols = t.columns();
    cols.iter().all(|c| {
        c.iter().all(|&x| alphabet.contains(x)) && c.windows(2).all(|w| alphabet.rank_of(w[0]) < alphabet.rank_of(w[1]))
    }) && cols.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(&r, &l)| alphabet.rank_of(l) <= alphabet.rank_of(r)))
}

/// Positions (column, row) of the reading word.
fn reading_positions(t: &Tableau) -> Vec<(usize, usize)> {
    t.columns.iter().enumerate().flat_map(|(c, col)| (0..col.len()).rev().map(move |r| (c, r))).collect()
}

type Cells = Vec<(usize, usize)>;

/// Free `+` and `−` positions of the `i`-signature.
fn signature<A: Alphabet>(a: &A, i: Node, t: &Tableau) -> (Cells, Cells) {
    let mut open_minus: Vec<(usize, usize)> = Vec::new();
    let mut free_plus = Vec::new();
    for (c, r) in reading_positions(t) {
        match a.sign(i, t.columns[c][r]) {
            Sign::Plus => {
                if open_minus.pop().is_none() {
                    free_plus.push((c, r));
                }
            }
            Sign::Minus => open_minus.push((c, r)),
            Sign::Zero => {}
        }
    }
    (free_plus, open_minus)
}

/// The crystal of tableaux over an alphabet; `B(λ)` is the component of the column
/// tableau built from `1..=h` in each column.
#[derive(Clone, Debug)]
pub struct TableauCrystal<A> {
    pub alphabet: A,
}

impl<A: Alphabet> TableauCrystal<A> {
    pub fn new(alphabet: A) -> Self {
        TableauCrystal { alphabet }
    }

    /// The highest weight tableau with the given column heights.
    pub fn highest(&self, heights: &[usize]) -> Tableau {
        Tableau { columns: heights.iter().map(|&h| (1..=h as Letter).collect()).collect() }
    }

    /// Highest weight tableau of a partition shape.
    pub fn highest_of_shape(&self, shape: &[usize]) -> Tableau {
        let heights: Vec<usize> =
            (0..shape.first().copied().unwrap_or(0)).map(|c| shape.iter().filter(|&&p| p > c).count()).collect();
        self.highest(&heights)
    }
}

impl<A: Alphabet> Crystal for TableauCrystal<A> {
    type Vertex = Tableau;

    fn datum(&self) -> &CartanDatum {
        self.alphabet.datum()
    }

    fn f(&self, i: Node, b: &Tableau) -> Option<Tableau> {
        self.datum().index(i).ok()?;
        let (plus, _) = signature(&self.alphabet, i, b);
        let &(c, r) = plus.last()?;
        let mut t = b.clone();
        t.columns[c][r] = self.alphabet.lower(i, t.columns[c][r]);
        Some(t)
    }

    fn e(&self, i: Node, b: &Tableau) -> Option<Tableau> {
        self.datum().index(i).ok()?;
        let (_, minus) = signature(&self.alphabet, i, b);
        let &(c, r) = minus.first()?;
        let mut t = b.clone();
        t.columns[c][r] = self.alphabet.raise(i, t.columns[c][r]);
        Some(t)
    }

    fn weight(&self, b: &Tableau) -> Weight {
        b.columns.iter().flatten().fold(Weight::zero(self.datum()), |acc, &x| acc.add(&self.alphabet.letter_weight(x)))
    }

    fn phi(&self, i: Node, b: &Tableau) -> usize {
        if self.datum().index(i).is_err() {
            return 0;
        }
        signature(&self.alphabet, i, b).0.len()
    }

    fn eps(&self, i: Node, b: &Tableau) -> usize {
        if self.datum().index(i).is_err() {
            return 0;
        }
        signature(&self.alphabet, i, b).1.len()
    }
}
