//! l-tuples of factored rational functions in u with exact symbolic roots.
//!
//! A rational function is stored as a finite multiset of roots: a map from
//! [`SymbolicPoint`] to nonzero integer multiplicity. The empty map is the
//! constant function 1; the zero function has no representation.

use crate::lie::{LieDatum, LieType};
use crate::rational::{GaussRat, Rat};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// An exact point (param_coeff)·parameter + (Gaussian-rational constant).
///
/// At most one formal parameter may appear; a coefficient of zero forces
/// the parameter to be absent, so equality is structural on the normalized
/// form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolicPoint {
    param: Option<String>,
    coeff: Rat,
    constant: GaussRat,
}

impl SymbolicPoint {
    pub fn constant(value: GaussRat) -> SymbolicPoint {
        SymbolicPoint {
            param: None,
            coeff: Rat::zero(),
            constant: value,
        }
    }

    pub fn integer(n: i64) -> SymbolicPoint {
        SymbolicPoint::constant(GaussRat::from_int(n))
    }

    pub fn rational(r: Rat) -> SymbolicPoint {
        SymbolicPoint::constant(GaussRat::from_rat(r))
    }

    /// The bare parameter `name`.
    pub fn parameter(name: &str) -> SymbolicPoint {
        SymbolicPoint {
            param: Some(name.to_string()),
            coeff: Rat::from_integer(1),
            constant: GaussRat::default(),
        }
    }

    pub fn affine(param: Option<&str>, coeff: Rat, constant: GaussRat) -> Result<SymbolicPoint> {
        match (&param, coeff.is_zero()) {
            (Some(_), true) => Err(Error::ZeroParamCoeff),
            (None, false) => Err(Error::ZeroParamCoeff),
            _ => Ok(SymbolicPoint {
                param: param.map(str::to_string),
                coeff,
                constant,
            }),
        }
    }

    pub fn param(&self) -> Option<&str> {
        self.param.as_deref()
    }

    pub fn coeff(&self) -> Rat {
        self.coeff
    }

    pub fn constant_part(&self) -> GaussRat {
        self.constant
    }

    pub fn is_numeric(&self) -> bool {
        self.param.is_none()
    }

    /// The Gaussian-rational value, provided no parameter is present.
    pub fn numeric_value(&self) -> Result<GaussRat> {
        match &self.param {
            None => Ok(self.constant),
            Some(p) => Err(Error::SymbolicRoot {
                param: p.clone(),
                hint: "a fully numeric root is required here",
            }),
        }
    }

    /// Shift the point by an exact rational.
    pub fn shift(&self, c: Rat) -> SymbolicPoint {
        SymbolicPoint {
            param: self.param.clone(),
            coeff: self.coeff,
            constant: self.constant + GaussRat::from_rat(c),
        }
    }

    /// Divide the whole point (coefficient and constant) by d ≥ 1.
    pub fn divide(&self, d: i64) -> SymbolicPoint {
        let d = Rat::from_integer(d);
        SymbolicPoint {
            param: self.param.clone(),
            coeff: self.coeff / d,
            constant: self.constant.div_rat(d),
        }
    }
}

impl fmt::Display for SymbolicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.param {
            None => write!(f, "{}", self.constant),
            Some(p) => {
                if self.coeff == Rat::from_integer(1) {
                    write!(f, "{p}")?;
                } else {
                    write!(f, "{}·{p}", crate::rational::fmt_rat(&self.coeff))?;
                }
                if !self.constant.is_zero() {
                    write!(f, "+{}", self.constant)?;
                }
                Ok(())
            }
        }
    }
}

/// A factored rational function: roots with nonzero integer multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactoredRational {
    factors: BTreeMap<SymbolicPoint, i64>,
}

impl FactoredRational {
    /// The constant function 1.
    pub fn one() -> FactoredRational {
        FactoredRational::default()
    }

    /// A single factor (u − root)^mult.
    pub fn single(root: SymbolicPoint, mult: i64) -> Result<FactoredRational> {
        if mult == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let mut factors = BTreeMap::new();
        factors.insert(root, mult);
        Ok(FactoredRational { factors })
    }

    pub fn from_factors(
        pairs: impl IntoIterator<Item = (SymbolicPoint, i64)>,
    ) -> FactoredRational {
        let mut out = FactoredRational::one();
        for (root, mult) in pairs {
            out.add_root(root, mult);
        }
        out
    }

    fn add_root(&mut self, root: SymbolicPoint, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.factors.entry(root.clone()).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.factors.remove(&root);
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// True iff all multiplicities are positive (or no factors at all).
    pub fn is_polynomial(&self) -> bool {
        self.factors.values().all(|&m| m > 0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&SymbolicPoint, i64)> {
        self.factors.iter().map(|(k, &v)| (k, v))
    }

    pub fn multiplicity(&self, root: &SymbolicPoint) -> i64 {
        self.factors.get(root).copied().unwrap_or(0)
    }

    pub fn num_roots(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, other: &FactoredRational) -> FactoredRational {
        let mut out = self.clone();
        for (root, mult) in other.factors() {
            out.add_root(root.clone(), mult);
        }
        out
    }

    pub fn inv(&self) -> FactoredRational {
        FactoredRational {
            factors: self
                .factors
                .iter()
                .map(|(k, &m)| (k.clone(), -m))
                .collect(),
        }
    }

    /// Substitute u → u − c, which shifts every root by +c.
    pub fn shift_argument(&self, c: Rat) -> FactoredRational {
        if c.is_zero() {
            return self.clone();
        }
        FactoredRational {
            factors: self
                .factors
                .iter()
                .map(|(k, &m)| (k.shift(c), m))
                .collect(),
        }
    }

    /// Replace every root x by x/d, multiplicities unchanged. This is the
    /// normalization that transports the general-position test into the
    /// rank-1 setting.
    pub fn tilde_normalize(&self, d: i64) -> FactoredRational {
        debug_assert!(d >= 1);
        if d == 1 {
            return self.clone();
        }
        FactoredRational {
            factors: self
                .factors
                .iter()
                .map(|(k, &m)| (k.divide(d), m))
                .collect(),
        }
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (root, mult) in &self.factors {
            if !first {
                write!(f, "·")?;
            }
            first = false;
            if *mult == 1 {
                write!(f, "(u-({root}))")?;
            } else {
                write!(f, "(u-({root}))^{mult}")?;
            }
        }
        Ok(())
    }
}

/// An l-tuple of factored rational functions attached to a Lie type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalTuple {
    lie_type: LieType,
    components: Vec<FactoredRational>,
}

impl RationalTuple {
    pub fn identity(datum: &LieDatum) -> RationalTuple {
        RationalTuple {
            lie_type: datum.lie_type(),
            components: vec![FactoredRational::one(); datum.rank()],
        }
    }

    pub fn from_components(
        datum: &LieDatum,
        components: Vec<FactoredRational>,
    ) -> Result<RationalTuple> {
        if components.len() != datum.rank() {
            return Err(Error::Parse(format!(
                "expected {} components, got {}",
                datum.rank(),
                components.len()
            )));
        }
        Ok(RationalTuple {
            lie_type: datum.lie_type(),
            components,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// Component for a 1-based node index.
    pub fn component(&self, i: usize) -> &FactoredRational {
        &self.components[i - 1]
    }

    pub fn components(&self) -> &[FactoredRational] {
        &self.components
    }

    pub(crate) fn set_component(&mut self, i: usize, f: FactoredRational) {
        self.components[i - 1] = f;
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(FactoredRational::is_one)
    }

    pub fn is_polynomial(&self) -> bool {
        self.components.iter().all(FactoredRational::is_polynomial)
    }

    pub fn multiply(&self, other: &RationalTuple) -> Result<RationalTuple> {
        if self.lie_type != other.lie_type {
            return Err(Error::DatumMismatch {
                left: self.lie_type.to_string(),
                right: other.lie_type.to_string(),
            });
        }
        Ok(RationalTuple {
            lie_type: self.lie_type,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.mul(b))
                .collect(),
        })
    }

    pub fn invert(&self) -> RationalTuple {
        RationalTuple {
            lie_type: self.lie_type,
            components: self.components.iter().map(FactoredRational::inv).collect(),
        }
    }
}

/// The tuple of the i-th fundamental representation: component i is u − a,
/// all others are 1.
pub fn fundamental_tuple(datum: &LieDatum, i: usize, a: SymbolicPoint) -> Result<RationalTuple> {
    datum.check_node(i)?;
    let mut t = RationalTuple::identity(datum);
    t.set_component(i, FactoredRational::single(a, 1)?);
    Ok(t)
}

/// The Kirillov-Reshetikhin tuple: component i has the root string
/// a, a+1, ..., a+m−1.
pub fn kr_tuple(datum: &LieDatum, i: usize, a: SymbolicPoint, m: u32) -> Result<RationalTuple> {
    datum.check_node(i)?;
    if m == 0 {
        return Err(Error::Parse("KR length m must be at least 1".into()));
    }
    let mut t = RationalTuple::identity(datum);
    let factors = (0..m as i64).map(|k| (a.shift(Rat::from_integer(k)), 1));
    t.set_component(i, FactoredRational::from_factors(factors));
    Ok(t)
}

/// Deterministic random tuples for the relation and automorphism harnesses:
/// Gaussian-rational roots with denominators dividing 6, multiplicities in
/// −3..=3 excluding 0.
pub fn random_tuple<R: rand::Rng>(rng: &mut R, datum: &LieDatum, max_roots: usize) -> RationalTuple {
    let mut t = RationalTuple::identity(datum);
    for i in 1..=datum.rank() {
        let n = rng.gen_range(0..=max_roots);
        let mut f = FactoredRational::one();
        for _ in 0..n {
            let den = *[1i64, 2, 3, 6].get(rng.gen_range(0..4)).unwrap();
            let re = Rat::new(rng.gen_range(-6..=6), den);
            let im = if rng.gen_bool(0.25) {
                Rat::new(rng.gen_range(-6..=6), den)
            } else {
                Rat::zero()
            };
            let mult = loop {
                let m = rng.gen_range(-3..=3i64);
                if m != 0 {
                    break m;
                }
            };
            f.add_root(SymbolicPoint::constant(GaussRat::new(re, im)), mult);
        }
        t.set_component(i, f);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{make_lie_datum, Family};
    use crate::rational::{int, rat};

    fn datum(family: Family, rank: usize) -> LieDatum {
        make_lie_datum(LieType::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn fundamental_tuples() {
        let d = datum(Family::G2, 2);
        let t = fundamental_tuple(&d, 2, SymbolicPoint::integer(0)).unwrap();
        assert!(t.component(1).is_one());
        assert_eq!(t.component(2).multiplicity(&SymbolicPoint::integer(0)), 1);
    }

    #[test]
    fn kr_tuple_is_a_root_string() {
        let d = datum(Family::A, 1);
        let t = kr_tuple(&d, 1, SymbolicPoint::integer(0), 3).unwrap();
        let roots: Vec<_> = t.component(1).factors().map(|(r, m)| (r.clone(), m)).collect();
        assert_eq!(
            roots,
            vec![
                (SymbolicPoint::integer(0), 1),
                (SymbolicPoint::integer(1), 1),
                (SymbolicPoint::integer(2), 1)
            ]
        );

        let d = datum(Family::C, 2);
        let t = kr_tuple(&d, 2, SymbolicPoint::rational(rat(1, 2)), 2).unwrap();
        assert_eq!(t.component(2).multiplicity(&SymbolicPoint::rational(rat(1, 2))), 1);
        assert_eq!(t.component(2).multiplicity(&SymbolicPoint::rational(rat(3, 2))), 1);

        // m = 1 degenerates to the fundamental tuple
        let f = fundamental_tuple(&d, 1, SymbolicPoint::integer(4)).unwrap();
        let k = kr_tuple(&d, 1, SymbolicPoint::integer(4), 1).unwrap();
        assert_eq!(f, k);
    }

    #[test]
    fn multiplication_cancels() {
        let d = datum(Family::A, 2);
        let p = fundamental_tuple(&d, 1, SymbolicPoint::parameter("a")).unwrap();
        assert!(p.multiply(&p.invert()).unwrap().is_identity());

        let sq = p.multiply(&p).unwrap();
        assert_eq!(sq.component(1).multiplicity(&SymbolicPoint::parameter("a")), 2);

        let q = FactoredRational::from_factors([
            (SymbolicPoint::integer(0), -1),
            (SymbolicPoint::integer(1), 1),
        ]);
        let r = FactoredRational::single(SymbolicPoint::integer(0), 1).unwrap();
        let prod = r.mul(&q);
        assert_eq!(prod.multiplicity(&SymbolicPoint::integer(0)), 0);
        assert_eq!(prod.multiplicity(&SymbolicPoint::integer(1)), 1);
        assert_eq!(prod.num_roots(), 1);
    }

    #[test]
    fn shifting_roots() {
        let f = FactoredRational::single(SymbolicPoint::parameter("a"), 1).unwrap();
        let shifted = f.shift_argument(rat(1, 2));
        let expected = SymbolicPoint::affine(Some("a"), int(1), GaussRat::from_rat(rat(1, 2))).unwrap();
        assert_eq!(shifted.multiplicity(&expected), 1);
        assert_eq!(f.shift_argument(int(0)), f);
        assert_eq!(shifted.shift_argument(rat(-1, 2)), f);
    }

    #[test]
    fn tilde_normalization() {
        // root a+1 with d = 2 becomes a/2 + 1/2
        let root = SymbolicPoint::affine(Some("a"), int(1), GaussRat::from_int(1)).unwrap();
        let f = FactoredRational::single(root, 1).unwrap();
        let tilded = f.tilde_normalize(2);
        let expected =
            SymbolicPoint::affine(Some("a"), rat(1, 2), GaussRat::from_rat(rat(1, 2))).unwrap();
        assert_eq!(tilded.multiplicity(&expected), 1);

        assert_eq!(f.tilde_normalize(1), f);

        let g = FactoredRational::single(SymbolicPoint::rational(rat(3, 2)), 1).unwrap();
        assert_eq!(
            g.tilde_normalize(3)
                .multiplicity(&SymbolicPoint::rational(rat(1, 2))),
            1
        );
    }

    #[test]
    fn zero_coefficient_with_parameter_is_rejected() {
        assert!(SymbolicPoint::affine(Some("a"), int(0), GaussRat::from_int(1)).is_err());
        assert!(SymbolicPoint::affine(None, int(1), GaussRat::from_int(1)).is_err());
    }

    #[test]
    fn datum_mismatch_is_rejected() {
        let d1 = datum(Family::A, 2);
        let d2 = datum(Family::A, 3);
        let p = RationalTuple::identity(&d1);
        let q = RationalTuple::identity(&d2);
        assert!(p.multiply(&q).is_err());
    }
}
