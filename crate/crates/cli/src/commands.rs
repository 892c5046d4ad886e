//! The five subcommands. Each returns its rendered output and a decision.

use demazure_core::affine::cores::{b_statistics, core_lattice, cores_up_to, is_es_core};
use demazure_core::affine::partition::multipartition_display;
use demazure_core::affine::symbol::{level1_key_right_steps, Modulus, Symbol};
use demazure_core::affine::uglov::MultiSymbol;
use demazure_core::binfinity::{
    binfty_demazure_membership, is_aperiodic, orbit_membership, orbit_membership_any_charge, orbit_membership_lists,
    pi_embed, Multisegment,
};
use demazure_core::crystal::character::demazure_character;
use demazure_core::crystal::demazure::{character_of, demazure_enumerate, demazure_membership};
use demazure_core::crystal::key::KeyConfig;
use demazure_core::crystal::{orbit_word, CrystalGraph};
use demazure_core::{Error, WeylWord};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::job::{self, Family};
use crate::view::{KeyPair, View};
use crate::{CliError, Format, KeyMethod, MembershipMethod, SegmentAction};

/// Rendered output and whether the question asked was answered positively.
pub struct Output {
    pub text: String,
    pub positive: bool,
}

impl Output {
    fn yes(text: String) -> Self {
        Output { text, positive: true }
    }

    fn decided(text: String, positive: bool) -> Self {
        Output { text, positive }
    }
}

fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn with_schema(schema: &str, mut v: Value, extra: Value) -> Value {
    let obj = v.as_object_mut().expect("object");
    obj.insert("schema".into(), json!(schema));
    if let Value::Object(m) = extra {
        obj.extend(m);
    }
    v
}

fn bound_for<V: View>(v: &V, rank_bound: Option<usize>) -> Result<Option<usize>, CliError>
where
    V::Vertex: Send,
{
    if v.needs_bound() && rank_bound.is_none() {
        return Err(CliError::Usage("--rank-bound is required for affine crystals".into()));
    }
    Ok(rank_bound)
}

pub fn crystal<V: View>(v: &V, rank_bound: Option<usize>, format: Format) -> Result<Output, CliError>
where
    V::Vertex: Send,
{
    let g = CrystalGraph::generate(v, &v.highest(), bound_for(v, rank_bound)?);
    let text = match format {
        Format::Dot => g.to_dot(|x| v.label(x)),
        Format::Json => render(with_schema(
            "demazure/crystal-graph@1",
            g.to_json(|x| v.encode(x)),
            json!({ "job": v.describe(), "size": g.len(), "sources": g.sources() }),
        )),
        Format::Pretty | Format::Abacus => g.vertices.iter().map(|x| v.picture(x) + "\n").collect(),
    };
    Ok(Output::yes(text))
}

fn keys_for<V: View>(v: &V, b: &V::Vertex, m: KeyMethod) -> Result<(KeyPair<V::Vertex>, Vec<KeyMethod>), CliError>
where
    V::Vertex: Send,
{
    if m != KeyMethod::Crosscheck {
        return Ok((v.keys_by(b, m)?, vec![m]));
    }
    let methods = v.methods();
    let reference = v.keys_by(b, KeyMethod::Dilatation)?;
    for &other in &methods[1..] {
        let (l, r) = v.keys_by(b, other)?;
        let agree = r == reference.1 && l.as_ref().is_none_or(|l| Some(l) == reference.0.as_ref());
        if !agree {
            return Err(CliError::Disagreement(format!("{other:?} differs from dilatation at {}", v.label(b))));
        }
    }
    Ok((reference, methods))
}

fn key_record<V: View>(v: &V, b: &V::Vertex, pair: &KeyPair<V::Vertex>) -> Value
where
    V::Vertex: Send,
{
    let hw = v.highest();
    let word = |x: &V::Vertex| orbit_word(v, &hw, x).map(|w| w.letters().to_vec());
    json!({
        "vertex": v.encode(b),
        "label": v.label(b),
        "left": pair.0.as_ref().map(|x| v.encode(x)),
        "right": v.encode(&pair.1),
        "left_word": pair.0.as_ref().and_then(word),
        "right_word": word(&pair.1),
    })
}

pub fn key<V: View>(
    v: &V,
    vertex: Option<&str>,
    all: bool,
    method: KeyMethod,
    rank_bound: Option<usize>,
    format: Format,
) -> Result<Output, CliError>
where
    V::Vertex: Send,
{
    if all {
        let g = CrystalGraph::generate(v, &v.highest(), bound_for(v, rank_bound)?);
        let records: Vec<Value> = g
            .vertices
            .par_iter()
            .map(|b| keys_for(v, b, method).map(|(pair, _)| key_record(v, b, &pair)))
            .collect::<Result<_, _>>()?;
        let methods = if method == KeyMethod::Crosscheck { v.methods() } else { vec![method] };
        let out = json!({
            "schema": "demazure/key-sweep@1",
            "job": v.describe(),
            "methods": methods,
            "size": records.len(),
            "keys": records,
        });
        return Ok(Output::yes(render(out)));
    }
    let s = vertex.ok_or_else(|| CliError::Usage("--vertex or --all is required".into()))?;
    let b = v.parse_vertex(s)?;
    let (pair, methods) = keys_for(v, &b, method)?;
    let text = match format {
        Format::Pretty | Format::Abacus => {
            let mut t = String::new();
            if let Some(l) = &pair.0 {
                t += &format!("left key\n{}\n", v.picture(l));
            }
            t += &format!("right key\n{}", v.picture(&pair.1));
            t
        }
        _ => render(with_schema(
            "demazure/key@1",
            key_record(v, &b, &pair),
            json!({ "job": v.describe(), "methods": methods }),
        )),
    };
    Ok(Output::yes(text))
}

pub fn demazure<V: View>(v: &V, word: &[i64], vertex: Option<&str>, format: Format) -> Result<Output, CliError>
where
    V::Vertex: Send,
{
    let w = WeylWord::new(v.datum(), word)?;
    let hw = v.highest();
    if let Some(s) = vertex {
        let b = v.parse_vertex(s)?;
        let member = demazure_membership(v, &hw, &b, &w, &KeyConfig::default())?;
        let out = json!({
            "schema": "demazure/membership@1",
            "job": v.describe(),
            "word": word,
            "vertex": v.encode(&b),
            "member": member,
        });
        return Ok(Output::decided(render(out), member));
    }
    let set = demazure_enumerate(v, &hw, word);
    let ch = character_of(v, &set);
    let operators = demazure_character(v.datum(), &v.weight(&hw), word)?;
    let text = match format {
        Format::Pretty | Format::Abacus => set.iter().map(|x| v.picture(x) + "\n").collect(),
        Format::Dot => return Err(CliError::Usage("dot output is for graphs".into())),
        Format::Json => render(json!({
            "schema": "demazure/demazure-crystal@1",
            "job": v.describe(),
            "word": word,
            "reduced": w.length() == word.len(),
            "size": set.len(),
            "vertices": set.iter().map(|x| v.encode(x)).collect::<Vec<_>>(),
            "character": ch.to_json(),
            "character_matches_operators": ch == operators,
        })),
    };
    Ok(Output::yes(text))
}

pub fn core(
    family: Family,
    charges: &[i64],
    vertex: Option<&str>,
    lattice: bool,
    key: bool,
    rank_bound: Option<usize>,
    format: Format,
) -> Result<Output, CliError> {
    let modulus = family.modulus()?;
    if charges.is_empty() {
        return Err(CliError::Usage("--charges is required".into()));
    }
    if key {
        let (Family::Affine(e), [s]) = (family, charges) else {
            return Err(CliError::Usage("--key needs level 1 and finite e".into()));
        };
        let m = job::multipartition(vertex.ok_or_else(|| CliError::Usage("--vertex is required".into()))?, 1)?;
        let (k, steps) = level1_key_right_steps(&Symbol::new(*s, m[0].clone()), e)?;
        let out = json!({
            "schema": "demazure/level-one-key@1",
            "type": family.tag(),
            "charge": s,
            "partition": m[0],
            "key": k.partition,
            "symbol": k.to_json(),
            "steps": steps.iter().map(|x| json!({ "p": x.p, "q": x.q })).collect::<Vec<_>>(),
        });
        return Ok(Output::yes(render(out)));
    }
    if let Some(s) = vertex {
        let m = job::multipartition(s, charges.len())?;
        let core = is_es_core(&m, modulus, charges)?;
        if format == Format::Abacus {
            let text = MultiSymbol::new(charges.to_vec(), m)?.abacus() + "\n";
            return Ok(Output::decided(text, core));
        }
        let stats = match modulus {
            Modulus::Finite(e) => {
                let b = b_statistics(&m, e, charges)?;
                json!({ "table": b.table, "consistent": b.consistent })
            }
            Modulus::Infinite => Value::Null,
        };
        let out = json!({
            "schema": "demazure/core-test@1",
            "type": family.tag(),
            "charges": charges,
            "multipartition": m,
            "core": core,
            "b_statistics": stats,
        });
        return Ok(Output::decided(render(out), core));
    }
    let bound = rank_bound.ok_or_else(|| CliError::Usage("--rank-bound is required".into()))?;
    if lattice {
        let l = core_lattice(modulus, charges, bound);
        let text = match format {
            Format::Dot => l.to_dot(),
            _ => render(with_schema(
                "demazure/core-lattice@1",
                l.to_json(),
                json!({ "type": family.tag(), "charges": charges }),
            )),
        };
        return Ok(Output::yes(text));
    }
    let cores = cores_up_to(modulus, charges, bound);
    let text = match format {
        Format::Abacus => cores
            .iter()
            .map(|c| {
                let a = MultiSymbol::new(charges.to_vec(), c.clone()).map(|m| m.abacus()).unwrap_or_default();
                format!("{}\n{a}\n", multipartition_display(c))
            })
            .collect(),
        _ => render(json!({
            "schema": "demazure/cores@1",
            "type": family.tag(),
            "charges": charges,
            "rank_bound": bound,
            "count": cores.len(),
            "cores": cores,
            "display": cores.iter().map(|c| multipartition_display(c)).collect::<Vec<_>>(),
        })),
    };
    Ok(Output::yes(text))
}

pub struct SegmentJob<'a> {
    pub family: Family,
    pub action: SegmentAction,
    pub charges: Option<Vec<i64>>,
    pub multisegment: Option<&'a str>,
    pub vertex: Option<&'a str>,
    pub level: Option<usize>,
    pub word: Option<&'a str>,
    pub method: MembershipMethod,
    pub rank_bound: Option<usize>,
}

fn need<T>(x: Option<T>, flag: &str) -> Result<T, CliError> {
    x.ok_or_else(|| CliError::Usage(format!("{flag} is required")))
}

pub fn multisegment(job: SegmentJob<'_>) -> Result<Output, CliError> {
    let modulus = job.family.modulus()?;
    let parse = |s: &str| s.parse::<Multisegment>().map_err(CliError::from);
    match job.action {
        SegmentAction::Embed => {
            let s = need(job.charges, "--charges")?;
            let m = job::multipartition(need(job.vertex, "--vertex")?, s.len())?;
            let ms = pi_embed(&m, &s)?;
            let out = json!({
                "schema": "demazure/multisegment@1",
                "charges": s,
                "multipartition": m,
                "multisegment": ms,
                "pretty": ms.to_string(),
            });
            Ok(Output::yes(render(out)))
        }
        SegmentAction::Aperiodic => {
            let Modulus::Finite(e) = modulus else {
                return Err(CliError::Usage("aperiodicity needs finite e".into()));
            };
            let ms = parse(need(job.multisegment, "--multisegment")?)?;
            let a = is_aperiodic(&ms, e);
            let out = json!({
                "schema": "demazure/aperiodic@1",
                "e": e,
                "multisegment": ms,
                "aperiodic": a,
                "in_finite_class": ms.in_finite_class(e),
            });
            Ok(Output::decided(render(out), a))
        }
        SegmentAction::Member => {
            let s = need(job.charges, "--charges")?;
            let ms = parse(need(job.multisegment, "--multisegment")?)?;
            let found = match job.method {
                MembershipMethod::Lists => orbit_membership_lists(&ms, modulus, &s),
                MembershipMethod::Exact => orbit_membership(&ms, modulus, &s),
            };
            membership_output(found, json!({ "type": job.family.tag(), "charges": s, "multisegment": ms }))
        }
        SegmentAction::AnyCharge => {
            let l = need(job.level, "--level")?;
            let ms = parse(need(job.multisegment, "--multisegment")?)?;
            let found = orbit_membership_any_charge(&ms, modulus, l);
            let normalized = found.as_ref().ok().map(|f| f.normalized.clone());
            membership_output(
                found.map(|f| f.membership),
                json!({ "type": job.family.tag(), "level": l, "multisegment": ms, "normalized_charges": normalized }),
            )
        }
        SegmentAction::Demazure => {
            let s = need(job.charges, "--charges")?;
            let ms = parse(need(job.multisegment, "--multisegment")?)?;
            let letters = job::word(job.word)?;
            let datum = match modulus {
                Modulus::Finite(e) => demazure_core::CartanDatum::affine_a(e)?,
                Modulus::Infinite => {
                    let rank: usize = ms.segments().iter().map(|x| x.len()).sum();
                    let (lo, hi) = demazure_core::affine::uglov::infinite_window(&s, rank);
                    demazure_core::CartanDatum::infinite_a(lo, hi)?
                }
            };
            let w = WeylWord::new(&datum, &letters)?;
            let member = match binfty_demazure_membership(&ms, &w, &s, modulus) {
                Err(Error::NotInOrbit) => false,
                r => r?,
            };
            let out = json!({
                "schema": "demazure/binfty-membership@1",
                "type": job.family.tag(),
                "charges": s,
                "word": letters,
                "multisegment": ms,
                "member": member,
            });
            Ok(Output::decided(render(out), member))
        }
        SegmentAction::RoundTrip => {
            let s = need(job.charges, "--charges")?;
            let bound = need(job.rank_bound, "--rank-bound")?;
            let cores = cores_up_to(modulus, &s, bound);
            let failures: Vec<String> = cores
                .par_iter()
                .filter_map(|c| {
                    let ok = pi_embed(c, &s).and_then(|m| {
                        let got = orbit_membership(&m, modulus, &s)?;
                        Ok(pi_embed(&got.lambda, &got.charges)? == m && (got.charges != s || &got.lambda == c))
                    });
                    (!matches!(ok, Ok(true))).then(|| multipartition_display(c))
                })
                .collect();
            let out = json!({
                "schema": "demazure/round-trip@1",
                "type": job.family.tag(),
                "charges": s,
                "rank_bound": bound,
                "checked": cores.len(),
                "failures": failures,
            });
            Ok(Output::decided(render(out), failures.is_empty()))
        }
    }
}

fn membership_output(
    found: Result<demazure_core::binfinity::Membership, Error>,
    job: Value,
) -> Result<Output, CliError> {
    match found {
        Ok(m) => Ok(Output::yes(render(with_schema(
            "demazure/orbit-membership@1",
            json!({ "member": true, "job": job }),
            m.to_json(),
        )))),
        Err(Error::NotInOrbit) => Ok(Output::decided(
            render(json!({ "schema": "demazure/orbit-membership@1", "member": false, "job": job })),
            false,
        )),
        Err(e) => Err(e.into()),
    }
}
