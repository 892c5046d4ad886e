//! One realization per `--type`, behind a common interface used by the commands.

use demazure_core::affine::kleshchev::{higher_level_key_left, higher_level_key_right, Kleshchev};
use demazure_core::affine::partition::{multipartition_display, Multipartition};
use demazure_core::affine::symbol::{level1_key_right, Symbol};
use demazure_core::affine::uglov::{MultiSymbol, Uglov};
use demazure_core::crystal::key::{key_left_reduced, key_right_reduced, keys, KeyConfig, PathTransport};
use demazure_core::crystal::Crystal;
use demazure_core::tableau::{Alphabet, Tableau, TableauCrystal};
use demazure_core::type_a::{self, ls_key_left, ls_key_right, TypeA};
use demazure_core::type_c::{self, Symplectic};
use demazure_core::{CartanDatum, Node, Weight};
use serde_json::{json, Value};

use crate::job::{self, Family};
use crate::{CliError, KeyMethod};

pub type KeyPair<V> = (Option<V>, V);

pub trait View: Crystal + Sync + Sized
where
    Self::Vertex: Send,
{
    fn highest(&self) -> Self::Vertex;
    fn describe(&self) -> Value;
    fn encode(&self, v: &Self::Vertex) -> Value;
    fn label(&self, v: &Self::Vertex) -> String;
    /// Tableau grid or abacus.
    fn picture(&self, v: &Self::Vertex) -> String;
    fn parse_vertex(&self, s: &str) -> Result<Self::Vertex, CliError>;
    /// Infinite crystals need a rank bound.
    fn needs_bound(&self) -> bool;
    fn methods(&self) -> Vec<KeyMethod>;
    fn keys_by(&self, v: &Self::Vertex, m: KeyMethod) -> Result<KeyPair<Self::Vertex>, CliError>;

    fn dilatation_keys(&self, v: &Self::Vertex) -> Result<KeyPair<Self::Vertex>, CliError> {
        let (l, r) = keys(self, &self.highest(), v, &KeyConfig::default())?;
        Ok((Some(l), r))
    }

    fn unsupported(&self, m: KeyMethod) -> CliError {
        CliError::Usage(format!("method {m:?} is not available here"))
    }
}

macro_rules! delegate_crystal {
    ($t:ty, $v:ty, $($g:tt)*) => {
        impl<$($g)*> Crystal for $t
        where
            <Self as Holder>::Inner: Crystal<Vertex = $v>,
        {
            type Vertex = $v;

            fn datum(&self) -> &CartanDatum {
                self.inner().datum()
            }
            fn f(&self, i: Node, b: &$v) -> Option<$v> {
                self.inner().f(i, b)
            }
            fn e(&self, i: Node, b: &$v) -> Option<$v> {
                self.inner().e(i, b)
            }
            fn weight(&self, b: &$v) -> Weight {
                self.inner().weight(b)
            }
            fn phi(&self, i: Node, b: &$v) -> usize {
                self.inner().phi(i, b)
            }
            fn eps(&self, i: Node, b: &$v) -> usize {
                self.inner().eps(i, b)
            }
            fn f_times(&self, i: Node, b: &$v, k: usize) -> Option<$v> {
                self.inner().f_times(i, b, k)
            }
        }
    };
}

/// Wrappers forward the crystal structure to the realization they hold.
pub trait Holder {
    type Inner;
    fn inner(&self) -> &Self::Inner;
}

impl<A: Alphabet> Holder for Finite<A> {
    type Inner = TableauCrystal<A>;
    fn inner(&self) -> &TableauCrystal<A> {
        &self.crystal
    }
}

impl<R> Holder for Affine<R> {
    type Inner = R;
    fn inner(&self) -> &R {
        &self.crystal
    }
}

delegate_crystal!(Finite<A>, Tableau, A: Alphabet);
delegate_crystal!(Affine<R>, Multipartition, R);

pub struct Finite<A: Alphabet> {
    pub crystal: TableauCrystal<A>,
    pub family: Family,
    pub weight: Vec<usize>,
    pub hw: Tableau,
}

impl<A: Alphabet> Finite<A> {
    fn column_hws(&self, t: &Tableau) -> Vec<Tableau> {
        t.columns().iter().map(|c| self.crystal.highest(&[c.len()])).collect()
    }

    fn reduced(&self, t: &Tableau) -> Result<KeyPair<Tableau>, CliError> {
        let c = &self.crystal;
        let fund = |x: &Tableau, h: &Tableau| keys(c, h, x, &KeyConfig::default());
        let hws = self.column_hws(t);
        let parts = t.split_columns();
        let r = PathTransport(c);
        let left = key_left_reduced(&hws, &parts, &r, &|x, h| Ok(fund(x, h)?.0))?;
        let right = key_right_reduced(&hws, &parts, &r, &|x, h| Ok(fund(x, h)?.1))?;
        Ok((Some(Tableau::join_columns(&left)), Tableau::join_columns(&right)))
    }
}

pub fn finite_a(n: usize, weight: Vec<usize>) -> Result<Finite<TypeA>, CliError> {
    let crystal = type_a::crystal(n)?;
    let hw = crystal.highest(&job::heights(&weight, n)?);
    Ok(Finite { crystal, family: Family::A(n), weight, hw })
}

pub fn finite_c(n: usize, weight: Vec<usize>) -> Result<Finite<Symplectic>, CliError> {
    let crystal = type_c::crystal(n)?;
    let hw = crystal.highest(&job::heights(&weight, n)?);
    Ok(Finite { crystal, family: Family::C(n), weight, hw })
}

macro_rules! finite_view {
    ($alphabet:ty, $valid:expr, $special:expr) => {
        impl View for Finite<$alphabet> {
            fn highest(&self) -> Tableau {
                self.hw.clone()
            }

            fn describe(&self) -> Value {
                json!({ "type": self.family.tag(), "weight": self.weight })
            }

            fn encode(&self, v: &Tableau) -> Value {
                v.to_json_rows()
            }

            fn label(&self, v: &Tableau) -> String {
                v.rows()
                    .iter()
                    .map(|r| r.iter().map(|&x| self.crystal.alphabet.display(x)).collect::<Vec<_>>().join(","))
                    .collect::<Vec<_>>()
                    .join("/")
            }

            fn picture(&self, v: &Tableau) -> String {
                v.pretty(&self.crystal.alphabet)
            }

            fn parse_vertex(&self, s: &str) -> Result<Tableau, CliError> {
                let t = job::tableau(s)?;
                let valid: fn(&$alphabet, &Tableau) -> bool = $valid;
                if !valid(&self.crystal.alphabet, &t) {
                    return Err(CliError::Usage(format!("`{s}` is not a valid tableau for {}", self.family.tag())));
                }
                if t.heights() != self.hw.heights() {
                    return Err(CliError::Usage(format!("`{s}` does not have the shape of the weight")));
                }
                Ok(t)
            }

            fn needs_bound(&self) -> bool {
                false
            }

            fn methods(&self) -> Vec<KeyMethod> {
                vec![KeyMethod::Dilatation, KeyMethod::Reduction, KeyMethod::Specialized]
            }

            fn keys_by(&self, v: &Tableau, m: KeyMethod) -> Result<KeyPair<Tableau>, CliError> {
                match m {
                    KeyMethod::Dilatation => self.dilatation_keys(v),
                    KeyMethod::Reduction => self.reduced(v),
                    KeyMethod::Specialized => {
                        let special: fn(&Self, &Tableau) -> Result<KeyPair<Tableau>, CliError> = $special;
                        special(self, v)
                    }
                    KeyMethod::Crosscheck => Err(self.unsupported(m)),
                }
            }
        }
    };
}

finite_view!(TypeA, type_a::is_valid_tableau, |_, t| Ok((Some(ls_key_left(t)?), ls_key_right(t)?)));
finite_view!(Symplectic, type_c::is_type_c_tableau, |s, t| Ok((
    Some(type_c::key_left(&s.crystal, t)?),
    type_c::key_right(&s.crystal, t)?
)));

/// Which level `l` structure to use on multipartitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    Uglov,
    Kleshchev,
}

pub struct Affine<R> {
    pub crystal: R,
    pub family: Family,
    pub charges: Vec<i64>,
    pub realization: Realization,
}

impl<R> Affine<R> {
    fn specialized(&self, v: &Multipartition) -> Result<KeyPair<Multipartition>, CliError> {
        match (self.family, v.len()) {
            (Family::Affine(e), 1) => {
                let k = level1_key_right(&Symbol::new(self.charges[0], v[0].clone()), e)?;
                Ok((None, vec![k.partition]))
            }
            _ => Err(CliError::Usage("the specialized affine Key needs level 1 and finite e".into())),
        }
    }
}

macro_rules! affine_view {
    ($r:ty) => {
        impl View for Affine<$r> {
            fn highest(&self) -> Multipartition {
                self.crystal.empty()
            }

            fn describe(&self) -> Value {
                let r = match self.realization {
                    Realization::Uglov => "uglov",
                    Realization::Kleshchev => "kleshchev",
                };
                json!({ "type": self.family.tag(), "charges": self.charges, "realization": r })
            }

            fn encode(&self, v: &Multipartition) -> Value {
                json!(v)
            }

            fn label(&self, v: &Multipartition) -> String {
                multipartition_display(v)
            }

            fn picture(&self, v: &Multipartition) -> String {
                MultiSymbol::new(self.charges.clone(), v.clone()).map(|m| m.abacus()).unwrap_or_default()
            }

            fn parse_vertex(&self, s: &str) -> Result<Multipartition, CliError> {
                job::multipartition(s, self.charges.len())
            }

            fn needs_bound(&self) -> bool {
                true
            }

            fn methods(&self) -> Vec<KeyMethod> {
                let mut m = vec![KeyMethod::Dilatation];
                if self.realization == Realization::Kleshchev {
                    m.push(KeyMethod::Reduction);
                }
                if self.charges.len() == 1 && matches!(self.family, Family::Affine(_)) {
                    m.push(KeyMethod::Specialized);
                }
                m
            }

            fn keys_by(&self, v: &Multipartition, m: KeyMethod) -> Result<KeyPair<Multipartition>, CliError> {
                if !self.methods().contains(&m) {
                    return Err(self.unsupported(m));
                }
                match m {
                    KeyMethod::Dilatation => self.dilatation_keys(v),
                    KeyMethod::Specialized => self.specialized(v),
                    _ => {
                        let Family::Affine(e) = self.family else { return Err(self.unsupported(m)) };
                        Ok((
                            Some(higher_level_key_left(v, &self.charges, e)?),
                            higher_level_key_right(v, &self.charges, e)?,
                        ))
                    }
                }
            }
        }
    };
}

affine_view!(Uglov);
affine_view!(Kleshchev);

pub enum AnyView {
    A(Finite<TypeA>),
    C(Finite<Symplectic>),
    U(Affine<Uglov>),
    K(Affine<Kleshchev>),
}

#[macro_export]
macro_rules! on_view {
    ($v:expr, $x:ident => $body:expr) => {
        match $v {
            $crate::view::AnyView::A($x) => $body,
            $crate::view::AnyView::C($x) => $body,
            $crate::view::AnyView::U($x) => $body,
            $crate::view::AnyView::K($x) => $body,
        }
    };
}

pub fn build(
    family: Family,
    weight: Option<&str>,
    charges: Option<&str>,
    realization: Realization,
    rank_bound: Option<usize>,
) -> Result<AnyView, CliError> {
    let weight = || -> Result<Vec<usize>, CliError> {
        job::int_list(weight.ok_or_else(|| CliError::Usage("--weight is required".into()))?, "weight")
    };
    let charges = || -> Result<Vec<i64>, CliError> {
        let s = job::int_list(charges.ok_or_else(|| CliError::Usage("--charges is required".into()))?, "charges")?;
        if s.is_empty() {
            return Err(CliError::Usage("--charges is empty".into()));
        }
        Ok(s)
    };
    Ok(match family {
        Family::A(n) => AnyView::A(finite_a(n, weight()?)?),
        Family::C(n) => AnyView::C(finite_c(n, weight()?)?),
        Family::Affine(e) => {
            let s = charges()?;
            match realization {
                Realization::Uglov => {
                    AnyView::U(Affine { crystal: Uglov::affine(e, &s)?, family, charges: s, realization })
                }
                Realization::Kleshchev => {
                    AnyView::K(Affine { crystal: Kleshchev::new(e, &s)?, family, charges: s, realization })
                }
            }
        }
        Family::Infinite => {
            if realization == Realization::Kleshchev {
                return Err(CliError::Usage("the Kleshchev realization needs finite e".into()));
            }
            let s = charges()?;
            let bound = rank_bound.ok_or_else(|| CliError::Usage("--rank-bound is required for A~:inf".into()))?;
            let crystal = Uglov::new(demazure_core::affine::symbol::Modulus::Infinite, &s, bound)?;
            AnyView::U(Affine { crystal, family, charges: s, realization })
        }
    })
}
