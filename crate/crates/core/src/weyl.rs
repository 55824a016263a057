//! Weyl group machinery: simple reflections on weight coordinates,
//! reducedness checking, the longest-element word catalog and suffix
//! extraction for the prefix algorithm.
//!
//! Weyl elements are only ever needed through their action on integer
//! coordinate vectors (fundamental-weight basis for weights, simple-root
//! basis for the reducedness oracle), so no root-vector model is built.

use crate::lie::{Family, LieDatum, LieType};
use crate::{Error, Result};
use std::collections::{BTreeSet, VecDeque};

/// A word in the simple reflections, letters being 1-based node indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylWord {
    lie_type: LieType,
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(datum: &LieDatum, letters: Vec<usize>) -> Result<WeylWord> {
        for &r in &letters {
            datum.check_node(r)?;
        }
        Ok(WeylWord {
            lie_type: datum.lie_type(),
            letters,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The suffix s_{r_{j+1}}...s_{r_p}; `suffix(0)` is the whole word and
    /// `suffix(p)` is empty.
    pub fn suffix(&self, j: usize) -> Result<WeylWord> {
        if j > self.letters.len() {
            return Err(Error::SuffixOutOfRange {
                index: j,
                len: self.letters.len(),
            });
        }
        Ok(WeylWord {
            lie_type: self.lie_type,
            letters: self.letters[j..].to_vec(),
        })
    }
}

/// An integer weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn rho(rank: usize) -> WeightVector {
        WeightVector(vec![1; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }
}

/// s_i(λ) = λ − λ_i·α_i with α_i = Σ_j a_{ji}·ω_j.
pub fn simple_reflection(datum: &LieDatum, i: usize, w: &WeightVector) -> Result<WeightVector> {
    datum.check_node(i)?;
    let li = w.0[i - 1];
    let coords = w
        .0
        .iter()
        .enumerate()
        .map(|(j0, &c)| c - li * datum.a(j0 + 1, i))
        .collect();
    Ok(WeightVector(coords))
}

/// Right-to-left application: s_{r_1}(s_{r_2}(...s_{r_p}(λ))).
pub fn apply_word_to_weight(
    datum: &LieDatum,
    word: &WeylWord,
    w: &WeightVector,
) -> Result<WeightVector> {
    let mut cur = w.clone();
    for &r in word.letters().iter().rev() {
        cur = simple_reflection(datum, r, &cur)?;
    }
    Ok(cur)
}

/// Reducedness oracle over a raw Cartan matrix. Tracks the images of the
/// simple roots in simple-root coordinates; the word is reduced iff no
/// prefix sends the next letter's simple root negative.
pub fn is_reduced_raw(cartan: &[Vec<i64>], letters: &[usize]) -> bool {
    let l = cartan.len();
    // columns[j] = image of α_{j+1} under the prefix product so far
    let mut columns: Vec<Vec<i64>> = (0..l)
        .map(|j| {
            let mut e = vec![0i64; l];
            e[j] = 1;
            e
        })
        .collect();
    for &r in letters {
        if columns[r - 1].iter().any(|&x| x < 0) {
            return false;
        }
        // multiply the prefix matrix on the right by s_r, whose column j is
        // s_r(α_j) = α_j - a_{rj}·α_r
        let pivot = columns[r - 1].clone();
        for j in 0..l {
            if j == r - 1 {
                continue;
            }
            let a_rj = cartan[r - 1][j];
            if a_rj != 0 {
                for t in 0..l {
                    columns[j][t] -= a_rj * pivot[t];
                }
            }
        }
        for t in 0..l {
            columns[r - 1][t] = -pivot[t];
        }
    }
    true
}

/// True iff the word's length equals the length of the element it spells.
pub fn is_reduced(datum: &LieDatum, word: &WeylWord) -> bool {
    is_reduced_raw(datum.cartan(), word.letters())
}

const G2_W0: [usize; 6] = [2, 1, 2, 1, 2, 1];

const F4_W0: [usize; 24] = [
    1, 2, 1, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4,
];

const E6_W0: [usize; 36] = [
    1, 2, 3, 1, 4, 2, 3, 1, 4, 3, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2,
    6, 5, 4, 3, 1,
];

const E7_TAIL: [usize; 27] = [
    7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7,
];

const E8_TAIL: [usize; 57] = [
    8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 7, 6,
    5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8,
];

/// Catalog letters of the longest-element words for the exceptional types.
pub fn exceptional_w0_letters(family: Family) -> Option<Vec<usize>> {
    match family {
        Family::G2 => Some(G2_W0.to_vec()),
        Family::F4 => Some(F4_W0.to_vec()),
        Family::E6 => Some(E6_W0.to_vec()),
        Family::E7 => {
            let mut v = E6_W0.to_vec();
            v.extend_from_slice(&E7_TAIL);
            Some(v)
        }
        Family::E8 => {
            let mut v = E6_W0.to_vec();
            v.extend_from_slice(&E7_TAIL);
            v.extend_from_slice(&E8_TAIL);
            Some(v)
        }
        _ => None,
    }
}

/// A reduced word for the longest element: the catalog word for
/// exceptional types, a generated one (greedy smallest-descent) for
/// classical families.
pub fn longest_word(datum: &LieDatum) -> Result<WeylWord> {
    if let Some(letters) = exceptional_w0_letters(datum.lie_type().family()) {
        return WeylWord::new(datum, letters);
    }
    // Drive ρ to -ρ; each step must pick a strictly positive coordinate,
    // smallest index first for determinism.
    let mut mu = WeightVector::rho(datum.rank());
    let mut applied: Vec<usize> = Vec::with_capacity(datum.lie_type().positive_root_count());
    loop {
        match mu.0.iter().position(|&c| c > 0) {
            Some(idx) => {
                let i = idx + 1;
                mu = simple_reflection(datum, i, &mu)?;
                applied.push(i);
            }
            None => break,
        }
    }
    debug_assert!(mu.is_antidominant());
    // μ was built as s_{i_N}(...s_{i_1}(ρ)...); right-to-left application
    // of the reversed letter list retraces it.
    applied.reverse();
    WeylWord::new(datum, applied)
}

/// Up to `budget` distinct reduced words reachable from `word` by
/// letter-level braid moves, the input included.
pub fn braid_equivalent_words(
    datum: &LieDatum,
    word: &WeylWord,
    budget: usize,
) -> Result<BTreeSet<Vec<usize>>> {
    if !is_reduced(datum, word) {
        return Err(Error::NotReduced {
            reason: "braid moves are only explored from reduced words".into(),
        });
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    seen.insert(word.letters().to_vec());
    queue.push_back(word.letters().to_vec());
    while let Some(current) = queue.pop_front() {
        if seen.len() >= budget {
            break;
        }
        for start in 0..current.len().saturating_sub(1) {
            let i = current[start];
            let j = current[start + 1];
            if i == j {
                continue;
            }
            let m = datum.coxeter_order(i, j);
            if start + m > current.len() {
                continue;
            }
            let alternating = (0..m).all(|k| {
                let expect = if k % 2 == 0 { i } else { j };
                current[start + k] == expect
            });
            if !alternating {
                continue;
            }
            let mut next = current.clone();
            for k in 0..m {
                next[start + k] = if k % 2 == 0 { j } else { i };
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
                if seen.len() >= budget {
                    break;
                }
            }
        }
    }
    Ok(seen)
}
