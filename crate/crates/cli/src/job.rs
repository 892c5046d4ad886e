//! Parsing of the job description shared by all subcommands.

use demazure_core::affine::partition::{parse_multipartition, Multipartition};
use demazure_core::affine::symbol::Modulus;
use demazure_core::tableau::{Letter, Tableau};
use demazure_core::{CartanDatum, Node};

use crate::CliError;

/// The `--type` tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A(usize),
    C(usize),
    Affine(usize),
    Infinite,
}

impl Family {
    pub fn parse(tag: &str) -> Result<Self, CliError> {
        let t = tag.trim();
        if t == "A~:inf" {
            return Ok(Family::Infinite);
        }
        let d = CartanDatum::parse(t)?;
        Ok(match t.split_once(':').map(|x| x.0.trim()) {
            Some("A") => Family::A(d.rank()),
            Some("C") => Family::C(d.rank()),
            _ => Family::Affine(d.rank()),
        })
    }

    pub fn tag(&self) -> String {
        match self {
            Family::A(n) => format!("A:{n}"),
            Family::C(n) => format!("C:{n}"),
            Family::Affine(e) => format!("A~:{e}"),
            Family::Infinite => "A~:inf".into(),
        }
    }

    pub fn modulus(&self) -> Result<Modulus, CliError> {
        match self {
            Family::Affine(e) => Ok(Modulus::Finite(*e)),
            Family::Infinite => Ok(Modulus::Infinite),
            _ => Err(CliError::Usage(format!("{} is not an affine type", self.tag()))),
        }
    }
}

pub fn int_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split([',', ' '])
        .filter(|x| !x.is_empty())
        .map(|x| x.trim().parse::<T>().map_err(|_| CliError::Usage(format!("bad {what} `{s}`"))))
        .collect()
}

pub fn word(s: Option<&str>) -> Result<Vec<Node>, CliError> {
    s.map_or(Ok(Vec::new()), |w| int_list(w, "word"))
}

/// Rows separated by `/`, entries by `,`; barred letters are negative.
pub fn tableau(s: &str) -> Result<Tableau, CliError> {
    let rows: Vec<Vec<Letter>> =
        s.split('/').map(|r| int_list::<Letter>(r, "tableau row")).collect::<Result<_, _>>()?;
    Ok(Tableau::from_rows(&rows)?)
}

pub fn multipartition(s: &str, level: usize) -> Result<Multipartition, CliError> {
    let m = parse_multipartition(s)?;
    if m.len() != level {
        return Err(CliError::Usage(format!("`{s}` has {} components, expected {level}", m.len())));
    }
    Ok(m)
}

/// Column heights of the highest weight tableau of `Σ a_i ω_i`, tallest first.
pub fn heights(weight: &[usize], n: usize) -> Result<Vec<usize>, CliError> {
    if weight.len() != n {
        return Err(CliError::Usage(format!("weight needs {n} coefficients")));
    }
    Ok((1..=n).rev().flat_map(|h| std::iter::repeat_n(h, weight[h - 1])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags() {
        assert_eq!(Family::parse("A:2").unwrap(), Family::A(2));
        assert_eq!(Family::parse("C:4").unwrap(), Family::C(4));
        assert_eq!(Family::parse("A~:3").unwrap(), Family::Affine(3));
        assert_eq!(Family::parse("A~:inf").unwrap(), Family::Infinite);
        assert!(Family::parse("B:2").is_err());
    }

    #[test]
    fn lists_and_tableaux() {
        assert_eq!(int_list::<i64>("0, 2,4", "x").unwrap(), vec![0, 2, 4]);
        assert!(word(Some("e")).unwrap().is_empty());
        let t = tableau("1,2,2/3,4,4/4,5").unwrap();
        assert_eq!(t.shape(), vec![3, 3, 2]);
        assert_eq!(heights(&[1, 0, 2], 3).unwrap(), vec![3, 3, 1]);
    }
}
