//! Cartan data, symmetrizers and node-numbering conventions for the simple
//! Lie algebra families A-G.
//!
//! The numbering conventions for the exceptional families are pinned by
//! validation: the shipped convention is the unique one under which the
//! longest-element words in the catalog are reduced of full length and the
//! regenerated fundamental cyclicity tables match the golden data. See
//! [`validate_numbering`].

use crate::{Error, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn fixed_rank(&self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            "E8" => Ok(Family::E8),
            "F4" => Ok(Family::F4),
            "G2" => Ok(Family::G2),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A simple Lie algebra family together with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        let constraint = match family {
            Family::A if rank < 1 => Some("rank must be at least 1 for A"),
            Family::B | Family::C if rank < 2 => Some("rank must be at least 2 for B and C"),
            Family::D if rank < 4 => Some("rank must be at least 4 for D"),
            _ => None,
        };
        if let Some(constraint) = constraint {
            return Err(Error::InvalidRank {
                family: family.name(),
                rank,
                constraint,
            });
        }
        if let Some(fixed) = family.fixed_rank() {
            if rank != fixed {
                return Err(Error::InvalidRank {
                    family: family.name(),
                    rank,
                    constraint: "exceptional families have a fixed rank",
                });
            }
        }
        Ok(LieType { family, rank })
    }

    /// Exceptional types need no explicit rank.
    pub fn exceptional(family: Family) -> Result<LieType> {
        match family.fixed_rank() {
            Some(rank) => LieType::new(family, rank),
            None => Err(Error::Parse(format!(
                "family {family} is classical and needs a rank"
            ))),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, which is the length of the longest Weyl
    /// group element.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
            Family::F4 => 24,
            Family::G2 => 6,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.fixed_rank().is_some() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}{}", self.family, self.rank)
        }
    }
}

/// A directed bond of the Dynkin diagram: nodes are 1-based, `aij` is the
/// Cartan entry in row `i`, column `j`.
type Bond = (usize, usize, i64, i64);

/// A node-numbering convention: the bonds it induces plus an identifying tag.
#[derive(Clone, Debug)]
pub struct Numbering {
    pub tag: String,
    pub bonds: Vec<Bond>,
}

/// Cartan matrix, symmetrizers and the numbering convention in force.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieDatum {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    numbering_tag: String,
}

impl LieDatum {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Cartan entry a_ij with 1-based node indices.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// Symmetrizer d_i with a 1-based node index.
    pub fn d(&self, i: usize) -> i64 {
        self.symmetrizers[i - 1]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn numbering_tag(&self) -> &str {
        &self.numbering_tag
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i >= 1 && i <= self.rank() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: i,
                rank: self.rank(),
            })
        }
    }

    /// Order of the product s_i s_j in the Weyl group, read off a_ij·a_ji.
    pub fn coxeter_order(&self, i: usize, j: usize) -> usize {
        match self.a(i, j) * self.a(j, i) {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            other => unreachable!("off-diagonal product {other} violates Cartan invariants"),
        }
    }

    /// Build a datum from explicit bonds; computes the symmetrizers and
    /// checks every Cartan invariant.
    pub fn from_numbering(lie_type: LieType, numbering: &Numbering) -> Result<LieDatum> {
        let l = lie_type.rank();
        let mut cartan = vec![vec![0i64; l]; l];
        for i in 0..l {
            cartan[i][i] = 2;
        }
        for &(i, j, aij, aji) in &numbering.bonds {
            cartan[i - 1][j - 1] = aij;
            cartan[j - 1][i - 1] = aji;
        }
        let symmetrizers = symmetrizers_for(&cartan)?;
        let datum = LieDatum {
            lie_type,
            cartan,
            symmetrizers,
            numbering_tag: numbering.tag.clone(),
        };
        datum.check_invariants()?;
        Ok(datum)
    }

    fn check_invariants(&self) -> Result<()> {
        let l = self.rank();
        let bad = |msg: String| Error::Parse(msg);
        for i in 0..l {
            if self.cartan[i][i] != 2 {
                return Err(bad(format!("a_{{{i}{i}}} != 2")));
            }
            for j in 0..l {
                if i == j {
                    continue;
                }
                let aij = self.cartan[i][j];
                let aji = self.cartan[j][i];
                if !(-3..=0).contains(&aij) {
                    return Err(bad(format!("a_{{{i}{j}}} = {aij} outside {{0,-1,-2,-3}}")));
                }
                if (aij == 0) != (aji == 0) {
                    return Err(bad(format!("a_{{{i}{j}}} zero pattern asymmetric")));
                }
                if !(0..=3).contains(&(aij * aji)) {
                    return Err(bad(format!("a_{{{i}{j}}}·a_{{{j}{i}}} = {}", aij * aji)));
                }
                if self.symmetrizers[i] * aij != self.symmetrizers[j] * aji {
                    return Err(bad("DA is not symmetric".into()));
                }
            }
        }
        let gcd = self.symmetrizers.iter().fold(0i64, |g, &d| g.gcd(&d));
        if gcd != 1 {
            return Err(bad(format!("symmetrizers have gcd {gcd} != 1")));
        }
        Ok(())
    }
}

/// Solve d_i·a_ij = d_j·a_ji for positive coprime integers by propagating
/// ratios over the (connected) diagram.
fn symmetrizers_for(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    use num_rational::Rational64;
    let l = cartan.len();
    let mut d: Vec<Option<Rational64>> = vec![None; l];
    d[0] = Some(Rational64::from_integer(1));
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        let di = d[i].unwrap();
        for j in 0..l {
            if i == j || cartan[i][j] == 0 || d[j].is_some() {
                continue;
            }
            // d_j = d_i * a_ij / a_ji
            d[j] = Some(di * Rational64::new(cartan[i][j], cartan[j][i]));
            queue.push(j);
        }
    }
    if d.iter().any(|x| x.is_none()) {
        return Err(Error::Parse("Dynkin diagram is disconnected".into()));
    }
    let lcm_den = d
        .iter()
        .map(|x| *x.unwrap().denom())
        .fold(1i64, |a, b| a.lcm(&b));
    let mut ints: Vec<i64> = d
        .iter()
        .map(|x| {
            let r = x.unwrap() * Rational64::from_integer(lcm_den);
            *r.numer()
        })
        .collect();
    let gcd = ints.iter().fold(0i64, |g, &x| g.gcd(&x));
    for x in &mut ints {
        *x /= gcd;
    }
    if ints.iter().any(|&x| x <= 0) {
        return Err(Error::Parse("symmetrizers are not positive".into()));
    }
    Ok(ints)
}

/// The pinned numbering convention for a type, first in the candidate list.
pub fn pinned_numbering(lie_type: LieType) -> Numbering {
    candidate_numberings(lie_type).remove(0)
}

/// Construct the Cartan data for the convention this crate ships.
pub fn make_lie_datum(lie_type: LieType) -> Result<LieDatum> {
    LieDatum::from_numbering(lie_type, &pinned_numbering(lie_type))
}

fn chain_bonds(l: usize) -> Vec<Bond> {
    (1..l).map(|i| (i, i + 1, -1, -1)).collect()
}

/// Candidate node numberings for a type, pinned convention first.
///
/// Classical families follow the Bourbaki orientation (for B the last node
/// is short, for C the last node is long, for D the fork sits at the far
/// end). The exceptional conventions are the ones validated against the
/// longest-word catalog and the golden tables; the alternatives are kept so
/// a failed validation can report what else was tried.
pub fn candidate_numberings(lie_type: LieType) -> Vec<Numbering> {
    let l = lie_type.rank();
    match lie_type.family() {
        Family::A => vec![Numbering {
            tag: "bourbaki".into(),
            bonds: chain_bonds(l),
        }],
        Family::B => {
            let mut bonds = chain_bonds(l);
            bonds.pop();
            let mut last_short = bonds.clone();
            last_short.push((l - 1, l, -1, -2));
            let mut last_long = bonds;
            last_long.push((l - 1, l, -2, -1));
            vec![
                Numbering {
                    tag: "bourbaki-last-short".into(),
                    bonds: last_short,
                },
                Numbering {
                    tag: "last-long".into(),
                    bonds: last_long,
                },
            ]
        }
        Family::C => {
            let mut bonds = chain_bonds(l);
            bonds.pop();
            let mut last_long = bonds.clone();
            last_long.push((l - 1, l, -2, -1));
            let mut last_short = bonds;
            last_short.push((l - 1, l, -1, -2));
            vec![
                Numbering {
                    tag: "bourbaki-last-long".into(),
                    bonds: last_long,
                },
                Numbering {
                    tag: "last-short".into(),
                    bonds: last_short,
                },
            ]
        }
        Family::D => {
            let mut bonds = chain_bonds(l - 1);
            bonds.push((l - 2, l, -1, -1));
            vec![Numbering {
                tag: "bourbaki-fork-at-end".into(),
                bonds,
            }]
        }
        Family::E6 | Family::E7 | Family::E8 => {
            // Chain 1-3-4-5-...-l with node 2 attached to node 4.
            let mut bourbaki: Vec<Bond> = vec![(1, 3, -1, -1), (2, 4, -1, -1)];
            for i in 3..l {
                bourbaki.push((i, i + 1, -1, -1));
            }
            // Chain 1-2-...-(l-1) with node l attached to node 3 from the
            // branch end (Dynkin-style).
            let mut dynkin: Vec<Bond> = chain_bonds(l - 1);
            dynkin.push((3, l, -1, -1));
            vec![
                Numbering {
                    tag: "bourbaki".into(),
                    bonds: bourbaki,
                },
                Numbering {
                    tag: "chain-with-branch-at-3".into(),
                    bonds: dynkin,
                },
            ]
        }
        Family::F4 => {
            let long12 = vec![(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)];
            let long34 = vec![(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)];
            vec![
                Numbering {
                    tag: "bourbaki-long-12".into(),
                    bonds: long12,
                },
                Numbering {
                    tag: "long-34".into(),
                    bonds: long34,
                },
            ]
        }
        Family::G2 => {
            let node1_long = vec![(1, 2, -1, -3)];
            let node2_long = vec![(1, 2, -3, -1)];
            vec![
                Numbering {
                    tag: "node-1-long".into(),
                    bonds: node1_long,
                },
                Numbering {
                    tag: "node-2-long".into(),
                    bonds: node2_long,
                },
            ]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(family: Family, rank: usize) -> LieDatum {
        make_lie_datum(LieType::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn a1_is_rank_one() {
        let d = datum(Family::A, 1);
        assert_eq!(d.cartan(), &[vec![2]]);
        assert_eq!(d.symmetrizers(), &[1]);
    }

    #[test]
    fn g2_matches_the_forced_convention() {
        // Forced by the five-case action: the diagonal rule puts d_1 = 3 and
        // the triple bond at node 2 puts a_21 = -3.
        let d = datum(Family::G2, 2);
        assert_eq!(d.cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(d.symmetrizers(), &[3, 1]);
    }

    #[test]
    fn c2_matches_the_forced_convention() {
        let d = datum(Family::C, 2);
        assert_eq!(d.cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(d.symmetrizers(), &[1, 2]);
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        assert!(LieType::new(Family::D, 3).is_err());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::E6, 7).is_err());
        assert!(LieType::new(Family::A, 0).is_err());
    }

    #[test]
    fn symmetrizers_are_coprime_and_da_symmetric() {
        let cases = [
            (Family::A, 5),
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 5),
            (Family::E6, 6),
            (Family::E7, 7),
            (Family::E8, 8),
            (Family::F4, 4),
            (Family::G2, 2),
        ];
        for (family, rank) in cases {
            let d = datum(family, rank);
            let l = d.rank();
            for i in 1..=l {
                for j in 1..=l {
                    assert_eq!(d.d(i) * d.a(i, j), d.d(j) * d.a(j, i), "{family}{rank}");
                    if i != j {
                        assert!((0..=3).contains(&(d.a(i, j) * d.a(j, i))));
                    }
                }
            }
            let gcd = d.symmetrizers().iter().fold(0i64, |g, &x| g.gcd(&x));
            assert_eq!(gcd, 1);
        }
    }
}
