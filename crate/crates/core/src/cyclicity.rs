//! Cyclicity sets and certificates for ordered tensor products.
//!
//! The prefix algorithm: walk the reduced word of the longest element,
//! apply the braid action of the suffix beyond each position to the first
//! factor's tuple, normalize the relevant component into the rank-1 world,
//! and solve the general-position condition symbolically for the parameter
//! difference a2 − a1. The union of the solutions over all positions is the
//! finite set at which cyclicity may fail.

pub mod golden;

use crate::braid::apply_word;
use crate::lie::LieDatum;
use crate::rational::{GaussRat, Rat};
use crate::ratfun::{fundamental_tuple, kr_tuple, FactoredRational, RationalTuple, SymbolicPoint};
use crate::weyl::WeylWord;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Names for the two formal base parameters used throughout.
pub const FIRST_PARAM: &str = "a1";
pub const SECOND_PARAM: &str = "a2";

/// Where a forbidden difference came from: the prefix position and the
/// braid-image root that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub prefix_index: usize,
    pub root: SymbolicPoint,
}

/// A finite set of Gaussian rationals, the values of a2 − a1 at which
/// cyclicity may fail, with provenance per value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CyclicitySet {
    values: BTreeMap<GaussRat, Vec<Witness>>,
}

impl CyclicitySet {
    pub fn new() -> CyclicitySet {
        CyclicitySet::default()
    }

    /// Insert one value. Denominators beyond 2 never arise for the
    /// supported families, so they are treated as corruption.
    pub fn insert(&mut self, value: GaussRat, witness: Witness) -> Result<()> {
        if *value.re.denom() > 2 || *value.im.denom() > 2 {
            return Err(Error::BadDenominator {
                value: value.to_string(),
            });
        }
        self.values.entry(value).or_default().push(witness);
        Ok(())
    }

    pub fn contains(&self, value: &GaussRat) -> bool {
        self.values.contains_key(value)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values in canonical order (real part, then imaginary part).
    pub fn values(&self) -> impl Iterator<Item = &GaussRat> {
        self.values.keys()
    }

    pub fn value_set(&self) -> BTreeSet<GaussRat> {
        self.values.keys().copied().collect()
    }

    pub fn witnesses(&self, value: &GaussRat) -> &[Witness] {
        self.values.get(value).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The set {v + r : v in self} with provenance carried over.
    pub fn shifted(&self, r: Rat) -> Result<CyclicitySet> {
        let mut out = CyclicitySet::new();
        let shift = GaussRat::from_rat(r);
        for (value, witnesses) in &self.values {
            for w in witnesses {
                out.insert(*value + shift, w.clone())?;
            }
        }
        Ok(out)
    }

    pub fn union_with(&mut self, other: &CyclicitySet) -> Result<()> {
        for (value, witnesses) in &other.values {
            for w in witnesses {
                self.insert(*value, w.clone())?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for CyclicitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, value) in self.values.keys().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{value}")?;
        }
        write!(f, "}}")
    }
}

/// A Kirillov-Reshetikhin factor: node b, numeric base a, string length m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrFactor {
    pub node: usize,
    pub base: GaussRat,
    pub length: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Every pairwise difference avoids its failure set.
    Cyclic,
    /// Some pair hit its set; the condition is sufficient only, so no
    /// negative claim is made.
    Unknown,
}

/// One ordered pair's test inside a certificate.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub first: usize,
    pub second: usize,
    pub difference: GaussRat,
    pub tested_set: CyclicitySet,
    pub member: bool,
}

#[derive(Clone, Debug)]
pub struct CyclicityCertificate {
    pub verdict: Verdict,
    pub pair_reports: Vec<PairReport>,
}

/// True iff no root t of q and root s of p satisfy t − s = 1. Both inputs
/// must be polynomials with fully numeric roots.
pub fn general_position(p: &FactoredRational, q: &FactoredRational) -> Result<bool> {
    for f in [p, q] {
        if !f.is_polynomial() {
            return Err(Error::Parse(
                "general position is defined for polynomials only".into(),
            ));
        }
    }
    let one = GaussRat::from_int(1);
    for (s, _) in p.factors() {
        let s = s.numeric_value().map_err(|_| Error::SymbolicRoot {
            param: s.param().unwrap_or("?").to_string(),
            hint: "use forbidden_differences for symbolic roots",
        })?;
        for (t, _) in q.factors() {
            let t = t.numeric_value().map_err(|_| Error::SymbolicRoot {
                param: t.param().unwrap_or("?").to_string(),
                hint: "use forbidden_differences for symbolic roots",
            })?;
            if t - s == one {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Solve t − s = 1 for a2 − a1, where every root s of `p` has the form
/// a1/d + const and every root t of `q` has the form a2/d + const.
/// Returns the exact solution set d·(1 + s_const − t_const).
pub fn forbidden_differences(
    p: &FactoredRational,
    q: &FactoredRational,
    d: i64,
) -> Result<BTreeSet<GaussRat>> {
    let coeff = Rat::new(1, d);
    let check = |root: &SymbolicPoint, param: &str| -> Result<GaussRat> {
        if root.param() != Some(param) || root.coeff() != coeff {
            return Err(Error::BadRootShape {
                root: root.to_string(),
                expected: format!("1/{d}·{param} + constant"),
            });
        }
        Ok(root.constant_part())
    };
    let mut out = BTreeSet::new();
    let d_rat = Rat::from_integer(d);
    for (s, _) in p.factors() {
        let s_const = check(s, FIRST_PARAM)?;
        for (t, _) in q.factors() {
            let t_const = check(t, SECOND_PARAM)?;
            // (a2 - a1)/d + t_const - s_const = 1
            out.insert((GaussRat::from_int(1) + s_const - t_const) * d_rat);
        }
    }
    Ok(out)
}

/// The prefix algorithm on arbitrary first/second tuples whose nontrivial
/// roots carry the parameters a1 and a2 respectively. The fundamental and
/// KR set computations are both instances of this.
pub fn prefix_failure_set(
    datum: &LieDatum,
    w0_word: &WeylWord,
    first: &RationalTuple,
    second: &RationalTuple,
) -> Result<CyclicitySet> {
    let letters = w0_word.letters();
    let mut out = CyclicitySet::new();
    for j in 1..=letters.len() {
        let node = letters[j - 1];
        let q = second.component(node);
        if q.is_one() {
            // the second factor contributes no roots at this node, so the
            // general-position condition is vacuous here
            continue;
        }
        let image = apply_word(datum, &w0_word.suffix(j)?, first)?;
        let component = image.component(node);
        if !component.is_polynomial() {
            return Err(Error::NonPolynomialPrefix {
                node,
                prefix: j,
                component: component.to_string(),
            });
        }
        let d = datum.d(node);
        let p_tilde = component.tilde_normalize(d);
        let q_tilde = q.tilde_normalize(d);
        let values = forbidden_differences(&p_tilde, &q_tilde, d)?;
        // provenance: each value traces to the braid-image root solving it
        for (s, _) in component.factors() {
            let s_tilde = s.divide(d);
            for (t, _) in q_tilde.factors() {
                let solved = (GaussRat::from_int(1) + s_tilde.constant_part()
                    - t.constant_part())
                    * Rat::from_integer(d);
                debug_assert!(values.contains(&solved));
                out.insert(
                    solved,
                    Witness {
                        prefix_index: j,
                        root: s.clone(),
                    },
                )?;
            }
        }
    }
    Ok(out)
}

/// S(b1, b2): the failure set for a pair of fundamental representations.
pub fn fundamental_set(
    datum: &LieDatum,
    w0_word: &WeylWord,
    b1: usize,
    b2: usize,
) -> Result<CyclicitySet> {
    datum.check_node(b1)?;
    datum.check_node(b2)?;
    let first = fundamental_tuple(datum, b1, SymbolicPoint::parameter(FIRST_PARAM))?;
    let second = fundamental_tuple(datum, b2, SymbolicPoint::parameter(SECOND_PARAM))?;
    prefix_failure_set(datum, w0_word, &first, &second)
}

/// The KR failure set as the shifted union
/// ⋃_{s=0}^{m2−1} ⋃_{r=0}^{m1−1} (S(b1,b2) − s + r).
pub fn kr_set(
    datum: &LieDatum,
    w0_word: &WeylWord,
    b1: usize,
    m1: u32,
    b2: usize,
    m2: u32,
) -> Result<CyclicitySet> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::Parse("KR lengths must be at least 1".into()));
    }
    let base = fundamental_set(datum, w0_word, b1, b2)?;
    let mut out = CyclicitySet::new();
    for s in 0..m2 as i64 {
        for r in 0..m1 as i64 {
            out.union_with(&base.shifted(Rat::from_integer(r - s))?)?;
        }
    }
    Ok(out)
}

/// Direct prefix computation on multi-root KR tuples; the independent
/// route against which the shifted-union formula is checked.
pub fn kr_set_by_prefix(
    datum: &LieDatum,
    w0_word: &WeylWord,
    b1: usize,
    m1: u32,
    b2: usize,
    m2: u32,
) -> Result<CyclicitySet> {
    let first = kr_tuple(datum, b1, SymbolicPoint::parameter(FIRST_PARAM), m1)?;
    let second = kr_tuple(datum, b2, SymbolicPoint::parameter(SECOND_PARAM), m2)?;
    prefix_failure_set(datum, w0_word, &first, &second)
}

/// Pairwise sufficiency test over an ordered list of KR factors.
pub fn check_tensor(
    datum: &LieDatum,
    w0_word: &WeylWord,
    factors: &[KrFactor],
) -> Result<CyclicityCertificate> {
    if factors.is_empty() {
        return Err(Error::Parse("at least one tensor factor is required".into()));
    }
    let mut pair_reports = Vec::new();
    let mut verdict = Verdict::Cyclic;
    for m in 0..factors.len() {
        for n in (m + 1)..factors.len() {
            let fm = &factors[m];
            let fn_ = &factors[n];
            let set = kr_set(datum, w0_word, fm.node, fm.length, fn_.node, fn_.length)?;
            let difference = fn_.base - fm.base;
            let member = set.contains(&difference);
            if member {
                verdict = Verdict::Unknown;
            }
            pair_reports.push(PairReport {
                first: m + 1,
                second: n + 1,
                difference,
                tested_set: set,
                member,
            });
        }
    }
    Ok(CyclicityCertificate {
        verdict,
        pair_reports,
    })
}

/// Order the multiset of roots of a Drinfeld tuple by non-increasing real
/// part; ties broken by imaginary part (descending), then node index.
/// The result is the tensor order for the local Weyl module construction.
pub fn weyl_module_order(
    datum: &LieDatum,
    pi: &RationalTuple,
) -> Result<Vec<(usize, GaussRat)>> {
    if pi.lie_type() != datum.lie_type() {
        return Err(Error::DatumMismatch {
            left: pi.lie_type().to_string(),
            right: datum.lie_type().to_string(),
        });
    }
    let mut entries: Vec<(usize, GaussRat)> = Vec::new();
    for node in 1..=datum.rank() {
        for (root, mult) in pi.component(node).factors() {
            if mult < 0 {
                return Err(Error::Parse(format!(
                    "component {node} is not a polynomial"
                )));
            }
            let value = root.numeric_value()?;
            for _ in 0..mult {
                entries.push((node, value));
            }
        }
    }
    entries.sort_by(|(na, a), (nb, b)| {
        b.re.cmp(&a.re)
            .then_with(|| b.im.cmp(&a.im))
            .then_with(|| na.cmp(nb))
    });
    Ok(entries)
}

/// All ordered pairs' fundamental sets, row-major in (b1, b2).
pub fn full_table(
    datum: &LieDatum,
    w0_word: &WeylWord,
) -> Result<Vec<((usize, usize), CyclicitySet)>> {
    let l = datum.rank();
    let mut out = Vec::with_capacity(l * l);
    for b1 in 1..=l {
        for b2 in 1..=l {
            out.push(((b1, b2), fundamental_set(datum, w0_word, b1, b2)?));
        }
    }
    Ok(out)
}

/// Outcome of checking a numbering convention against the reference data.
#[derive(Clone, Debug)]
pub struct NumberingValidation {
    pub numbering_tag: String,
    pub word_reduced: bool,
    pub word_length_ok: bool,
    pub entries_checked: usize,
    /// Pairs whose regenerated set differs from the reference set.
    pub mismatches: Vec<(usize, usize)>,
}

impl NumberingValidation {
    pub fn is_valid(&self) -> bool {
        self.word_reduced && self.word_length_ok && self.mismatches.is_empty()
    }
}

/// Check that `w0_word` is a reduced word for the longest element and that
/// the regenerated fundamental sets agree with the reference data (golden
/// tables for the exceptional families, closed forms for the classical
/// ones).
pub fn validate_numbering(datum: &LieDatum, w0_word: &WeylWord) -> Result<NumberingValidation> {
    let lie_type = datum.lie_type();
    let family = lie_type.family();
    let mut report = NumberingValidation {
        numbering_tag: datum.numbering_tag().to_string(),
        word_reduced: crate::weyl::is_reduced(datum, w0_word),
        word_length_ok: w0_word.len() == lie_type.positive_root_count(),
        entries_checked: 0,
        mismatches: Vec::new(),
    };
    if !report.word_reduced || !report.word_length_ok {
        return Ok(report);
    }
    for ((b1, b2), set) in full_table(datum, w0_word)? {
        let reference = if family.is_classical() {
            golden::classical_closed_form(family, lie_type.rank(), b1, b2)
        } else {
            golden::exceptional_entry(family, b1, b2)
        };
        let Some(reference) = reference else { continue };
        report.entries_checked += 1;
        if set.value_set() != reference {
            report.mismatches.push((b1, b2));
        }
    }
    Ok(report)
}

/// Pick the first candidate numbering that validates, or report the full
/// list of rejected candidates.
pub fn resolve_numbering(lie_type: crate::lie::LieType) -> Result<LieDatum> {
    let mut tried = Vec::new();
    for numbering in crate::lie::candidate_numberings(lie_type) {
        let datum = LieDatum::from_numbering(lie_type, &numbering)?;
        let w0 = crate::weyl::longest_word(&datum)?;
        if validate_numbering(&datum, &w0)?.is_valid() {
            return Ok(datum);
        }
        tried.push(numbering.tag);
    }
    Err(Error::NoNumberingValidates {
        family: lie_type.family().name(),
        tried,
    })
}
