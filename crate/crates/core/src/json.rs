//! Wire formats. Rationals travel as "num/den" strings, never floats.

use crate::cyclicity::{CyclicityCertificate, CyclicitySet};
use crate::lie::LieDatum;
use crate::rational::{fmt_rat, parse_rat, GaussRat};
use crate::ratfun::{FactoredRational, RationalTuple, SymbolicPoint};
use crate::weyl::WeylWord;
use crate::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::json;

#[derive(Serialize, Deserialize)]
pub struct FactorWire {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub param: Option<String>,
    /// Defaults to "1" when `param` is present and "0" otherwise.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub param_coeff: Option<String>,
    pub re: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub im: Option<String>,
    pub mult: i64,
}

#[derive(Serialize, Deserialize)]
pub struct ComponentWire {
    pub node: usize,
    pub factors: Vec<FactorWire>,
}

#[derive(Serialize, Deserialize)]
pub struct TupleWire {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rank: Option<usize>,
    pub components: Vec<ComponentWire>,
}

pub fn gauss_to_string(g: &GaussRat) -> String {
    if g.im.is_zero() {
        fmt_rat(&g.re)
    } else {
        format!("{}+{}i", fmt_rat(&g.re), fmt_rat(&g.im))
    }
}

pub fn tuple_to_wire(t: &RationalTuple) -> TupleWire {
    let lie_type = t.lie_type();
    let mut components = Vec::new();
    for node in 1..=lie_type.rank() {
        let f = t.component(node);
        if f.is_one() {
            continue;
        }
        let factors = f
            .factors()
            .map(|(root, mult)| FactorWire {
                param: root.param().map(str::to_string),
                param_coeff: root.param().map(|_| fmt_rat(&root.coeff())),
                re: fmt_rat(&root.constant_part().re),
                im: if root.constant_part().im.is_zero() {
                    None
                } else {
                    Some(fmt_rat(&root.constant_part().im))
                },
                mult,
            })
            .collect();
        components.push(ComponentWire { node, factors });
    }
    TupleWire {
        family: lie_type.family().name().to_string(),
        rank: if lie_type.family().fixed_rank().is_some() {
            None
        } else {
            Some(lie_type.rank())
        },
        components,
    }
}

pub fn tuple_from_wire(datum: &LieDatum, wire: &TupleWire) -> Result<RationalTuple> {
    let mut components = vec![FactoredRational::one(); datum.rank()];
    for c in &wire.components {
        datum.check_node(c.node)?;
        let mut pairs = Vec::new();
        for f in &c.factors {
            let coeff = match (&f.param_coeff, &f.param) {
                (Some(s), _) => parse_rat(s)?,
                (None, Some(_)) => crate::rational::one(),
                (None, None) => crate::rational::int(0),
            };
            let im = match &f.im {
                Some(s) => parse_rat(s)?,
                None => crate::rational::int(0),
            };
            let constant = GaussRat::new(parse_rat(&f.re)?, im);
            let root = SymbolicPoint::affine(f.param.as_deref(), coeff, constant)?;
            pairs.push((root, f.mult));
        }
        components[c.node - 1] = FactoredRational::from_factors(pairs);
    }
    RationalTuple::from_components(datum, components)
}

pub fn tuple_to_json(t: &RationalTuple) -> serde_json::Value {
    serde_json::to_value(tuple_to_wire(t)).expect("tuple wire serialization")
}

pub fn tuple_from_json(datum: &LieDatum, value: &serde_json::Value) -> Result<RationalTuple> {
    let wire: TupleWire = serde_json::from_value(value.clone())
        .map_err(|e| Error::Parse(format!("bad tuple JSON: {e}")))?;
    tuple_from_wire(datum, &wire)
}

pub fn cartan_json(datum: &LieDatum) -> serde_json::Value {
    json!({
        "family": datum.lie_type().family().name(),
        "rank": datum.rank(),
        "cartan": datum.cartan(),
        "d": datum.symmetrizers(),
        "numbering": datum.numbering_tag(),
    })
}

pub fn set_values_json(set: &CyclicitySet) -> serde_json::Value {
    json!(set.values().map(gauss_to_string).collect::<Vec<_>>())
}

pub fn set_json(
    datum: &LieDatum,
    word: &WeylWord,
    b1: usize,
    b2: usize,
    set: &CyclicitySet,
) -> serde_json::Value {
    let provenance: Vec<serde_json::Value> = set
        .values()
        .map(|v| {
            json!({
                "value": gauss_to_string(v),
                "witnesses": set
                    .witnesses(v)
                    .iter()
                    .map(|w| json!({
                        "prefix_index": w.prefix_index,
                        "root": w.root.to_string(),
                    }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "family": datum.lie_type().family().name(),
        "rank": datum.rank(),
        "numbering": datum.numbering_tag(),
        "word": word.letters(),
        "b1": b1,
        "b2": b2,
        "values": set_values_json(set),
        "provenance": provenance,
    })
}

pub fn certificate_json(cert: &CyclicityCertificate) -> serde_json::Value {
    json!({
        "verdict": cert.verdict,
        "pairs": cert
            .pair_reports
            .iter()
            .map(|p| json!({
                "first": p.first,
                "second": p.second,
                "difference": gauss_to_string(&p.difference),
                "set": set_values_json(&p.tested_set),
                "member": p.member,
            }))
            .collect::<Vec<_>>(),
    })
}

pub fn table_json(
    datum: &LieDatum,
    word: &WeylWord,
    table: &[((usize, usize), CyclicitySet)],
) -> serde_json::Value {
    json!({
        "family": datum.lie_type().family().name(),
        "rank": datum.rank(),
        "numbering": datum.numbering_tag(),
        "word": word.letters(),
        "sets": table
            .iter()
            .map(|((b1, b2), set)| json!({
                "b1": b1,
                "b2": b2,
                "values": set_values_json(set),
            }))
            .collect::<Vec<_>>(),
    })
}

/// One S(b1,b2) cell per pair, in a rank×rank grid.
pub fn table_markdown(
    datum: &LieDatum,
    word: &WeylWord,
    table: &[((usize, usize), CyclicitySet)],
) -> String {
    let l = datum.rank();
    let mut out = String::new();
    out.push_str(&format!(
        "# S(b1,b2) for {} (numbering: {}, word length {})\n\n",
        datum.lie_type(),
        datum.numbering_tag(),
        word.len()
    ));
    out.push_str("| b1\\b2 |");
    for b2 in 1..=l {
        out.push_str(&format!(" {b2} |"));
    }
    out.push('\n');
    out.push_str("|---|");
    for _ in 1..=l {
        out.push_str("---|");
    }
    out.push('\n');
    for b1 in 1..=l {
        out.push_str(&format!("| {b1} |"));
        for b2 in 1..=l {
            let set = table
                .iter()
                .find(|((p1, p2), _)| (*p1, *p2) == (b1, b2))
                .map(|(_, s)| s.to_string())
                .unwrap_or_default();
            out.push_str(&format!(" {set} |"));
        }
        out.push('\n');
    }
    out
}
