//! Acceptance gate: one pass/fail line per criterion (run with
//! `cargo test --test acceptance -- --nocapture` to see them all).

use drinfeld::braid::{apply_generator, apply_word, check_automorphism, check_braid_relation, single_factor_component};
use drinfeld::cyclicity::golden::{classical_closed_form, exceptional_entry};
use drinfeld::cyclicity::{full_table, kr_set, kr_set_by_prefix};
use drinfeld::lie::{make_lie_datum, Family, LieDatum, LieType};
use drinfeld::rational::{int, rat, Rat};
use drinfeld::ratfun::{fundamental_tuple, random_tuple, RationalTuple, SymbolicPoint};
use drinfeld::weyl::{braid_equivalent_words, is_reduced_raw, longest_word, WeylWord};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FAMILIES: [(Family, usize); 9] = [
    (Family::A, 4),
    (Family::B, 4),
    (Family::C, 4),
    (Family::D, 4),
    (Family::E6, 6),
    (Family::E7, 7),
    (Family::E8, 8),
    (Family::F4, 4),
    (Family::G2, 2),
];

fn datum(family: Family, rank: usize) -> LieDatum {
    make_lie_datum(LieType::new(family, rank).unwrap()).unwrap()
}

fn pi(d: &LieDatum, i: usize, a: SymbolicPoint) -> RationalTuple {
    fundamental_tuple(d, i, a).unwrap()
}

fn report(number: u32, name: &str, outcome: Result<(), String>) {
    match outcome {
        Ok(()) => println!("ACCEPTANCE {number} ({name}): PASS"),
        Err(msg) => {
            println!("ACCEPTANCE {number} ({name}): FAIL - {msg}");
            panic!("acceptance criterion {number} ({name}) failed: {msg}");
        }
    }
}

#[test]
fn criterion_1_golden_tables_exceptional() {
    let run = || -> Result<(), String> {
        for family in [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2] {
            let d = datum(family, family.fixed_rank().unwrap());
            let w0 = longest_word(&d).map_err(|e| e.to_string())?;
            for ((b1, b2), set) in full_table(&d, &w0).map_err(|e| e.to_string())? {
                let golden = exceptional_entry(family, b1, b2)
                    .ok_or_else(|| format!("{family:?} missing golden ({b1},{b2})"))?;
                if set.value_set() != golden {
                    return Err(format!(
                        "{family:?} S({b1},{b2}) = {set} differs from the reference"
                    ));
                }
            }
        }
        Ok(())
    };
    report(1, "golden tables, exceptional", run());
}

#[test]
fn criterion_2_golden_formulas_classical() {
    let run = || -> Result<(), String> {
        for (family, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
            for l in lo..=6 {
                let d = datum(family, l);
                let w0 = longest_word(&d).map_err(|e| e.to_string())?;
                for ((b1, b2), set) in full_table(&d, &w0).map_err(|e| e.to_string())? {
                    let golden = classical_closed_form(family, l, b1, b2).unwrap();
                    if set.value_set() != golden {
                        return Err(format!(
                            "{family:?}{l} S({b1},{b2}) = {set} differs from the closed form"
                        ));
                    }
                }
            }
        }
        Ok(())
    };
    report(2, "golden formulas, classical", run());
}

#[test]
fn criterion_3_braid_relations() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for (family, rank) in FAMILIES {
            let d = datum(family, rank);
            for i in 1..=rank {
                for j in (i + 1)..=rank {
                    for n in 0..1000 {
                        let p = random_tuple(&mut rng, &d, 2);
                        if !check_braid_relation(&d, i, j, &p).map_err(|e| e.to_string())? {
                            return Err(format!(
                                "{family:?}{rank} pair ({i},{j}) failed on random tuple #{n}"
                            ));
                        }
                    }
                }
            }
            // exhaustive single-factor tuples over the small shift grid
            let grid = [rat(0, 1), rat(1, 2), rat(-1, 2), int(1), int(-1), rat(3, 2)];
            for node in 1..=rank {
                for q in grid {
                    let p = pi(&d, node, SymbolicPoint::rational(q));
                    for i in 1..=rank {
                        for j in (i + 1)..=rank {
                            if !check_braid_relation(&d, i, j, &p).map_err(|e| e.to_string())? {
                                return Err(format!(
                                    "{family:?}{rank} pair ({i},{j}) failed on pi_{{{node},{q}}}"
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    };
    report(3, "braid relations", run());
}

fn random_reduced_letters(rng: &mut ChaCha8Rng, d: &LieDatum, target: usize) -> Vec<usize> {
    let mut letters: Vec<usize> = Vec::with_capacity(target);
    let mut nodes: Vec<usize> = (1..=d.rank()).collect();
    while letters.len() < target {
        nodes.shuffle(rng);
        let mut extended = false;
        for &n in &nodes {
            letters.push(n);
            if is_reduced_raw(d.cartan(), &letters) {
                extended = true;
                break;
            }
            letters.pop();
        }
        if !extended {
            break; // reached the longest element
        }
    }
    letters
}

#[test]
fn criterion_4_well_definedness() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(202);
        for (family, rank) in FAMILIES {
            let d = datum(family, rank);
            let target = 12.min(LieType::new(family, rank).unwrap().positive_root_count());
            let mut covered = 0;
            let mut attempts = 0;
            while covered < 200 && attempts < 2000 {
                attempts += 1;
                let letters = random_reduced_letters(&mut rng, &d, target);
                let word = WeylWord::new(&d, letters).map_err(|e| e.to_string())?;
                let rewritings =
                    braid_equivalent_words(&d, &word, 4).map_err(|e| e.to_string())?;
                if rewritings.len() < 2 {
                    continue; // no braid move applies to this word
                }
                covered += 1;
                let p = random_tuple(&mut rng, &d, 2);
                let reference = apply_word(&d, &word, &p).map_err(|e| e.to_string())?;
                for other in rewritings {
                    let w = WeylWord::new(&d, other.clone()).map_err(|e| e.to_string())?;
                    if apply_word(&d, &w, &p).map_err(|e| e.to_string())? != reference {
                        return Err(format!(
                            "{family:?}{rank}: words {:?} and {other:?} disagree",
                            word.letters()
                        ));
                    }
                }
            }
            if covered < 200 {
                return Err(format!(
                    "{family:?}{rank}: only {covered} words with >= 2 rewritings found"
                ));
            }
        }
        Ok(())
    };
    report(4, "well-definedness under braid moves", run());
}

#[test]
fn criterion_5_automorphism() {
    let run = || -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(303);
        for (family, rank) in FAMILIES {
            let d = datum(family, rank);
            for n in 0..1000 {
                let p = random_tuple(&mut rng, &d, 2);
                let q = random_tuple(&mut rng, &d, 2);
                let j = rng.gen_range(1..=rank);
                if !check_automorphism(&d, j, &p, &q).map_err(|e| e.to_string())? {
                    return Err(format!("{family:?}{rank} node {j} failed on pair #{n}"));
                }
            }
        }
        Ok(())
    };
    report(5, "automorphism property", run());
}

#[test]
fn criterion_6_prefix_polynomiality() {
    let run = || -> Result<(), String> {
        for (family, rank) in FAMILIES {
            let d = datum(family, rank);
            let w0 = longest_word(&d).map_err(|e| e.to_string())?;
            let letters = w0.letters().to_vec();
            for i in 1..=rank {
                // walk sigma_j from the empty suffix backwards, extending by
                // one generator per step
                let mut image = pi(&d, i, SymbolicPoint::integer(0));
                for j in (1..=letters.len()).rev() {
                    let node = letters[j - 1];
                    if !image.component(node).is_polynomial() {
                        return Err(format!(
                            "{family:?}{rank}: component {node} of T_sigma_{j}(pi_{i}) is not polynomial"
                        ));
                    }
                    image = apply_generator(&d, node, &image).map_err(|e| e.to_string())?;
                }
            }
        }
        Ok(())
    };
    report(6, "prefix polynomiality", run());
}

#[test]
fn criterion_7_generator_image_claims() {
    // the case-by-case images of T_i(pi_{i,a}) around each bond type
    let run = || -> Result<(), String> {
        let a = SymbolicPoint::parameter("a");
        let expect = |t: &RationalTuple, node: usize, factors: &[(Rat, i64)]| -> Result<(), String> {
            let c = t.component(node);
            if c.num_roots() != factors.iter().map(|&(_, m)| m.unsigned_abs() as usize).sum::<usize>() {
                return Err(format!("component {node} is {c}"));
            }
            for &(shift, mult) in factors {
                if c.multiplicity(&a.shift(shift)) != mult {
                    return Err(format!("component {node} is {c}, wanted mult {mult} at a+{shift}"));
                }
            }
            Ok(())
        };

        // simply laced: T_2(pi_{2,a}) on A3
        let d = datum(Family::A, 3);
        let t = apply_generator(&d, 2, &pi(&d, 2, a.clone())).map_err(|e| e.to_string())?;
        expect(&t, 1, &[(rat(1, 2), 1)])?;
        expect(&t, 2, &[(int(1), -1)])?;
        expect(&t, 3, &[(rat(1, 2), 1)])?;

        // doubled bond, B4 (node 3 long, node 4 short)
        let d = datum(Family::B, 4);
        let t = apply_generator(&d, 3, &pi(&d, 3, a.clone())).map_err(|e| e.to_string())?;
        expect(&t, 2, &[(int(1), 1)])?;
        expect(&t, 3, &[(int(2), -1)])?;
        expect(&t, 4, &[(int(1), 1), (rat(0, 1), 1)])?;
        let t = apply_generator(&d, 4, &pi(&d, 4, a.clone())).map_err(|e| e.to_string())?;
        expect(&t, 3, &[(int(1), 1)])?;
        expect(&t, 4, &[(int(1), -1)])?;

        // doubled bond, C4 (node 3 short, node 4 long)
        let d = datum(Family::C, 4);
        let t = apply_generator(&d, 3, &pi(&d, 3, a.clone())).map_err(|e| e.to_string())?;
        expect(&t, 2, &[(rat(1, 2), 1)])?;
        expect(&t, 3, &[(int(1), -1)])?;
        expect(&t, 4, &[(int(1), 1)])?;
        let t = apply_generator(&d, 4, &pi(&d, 4, a.clone())).map_err(|e| e.to_string())?;
        expect(&t, 3, &[(int(1), 1), (rat(0, 1), 1)])?;
        expect(&t, 4, &[(int(2), -1)])?;

        // tripled bond, G2
        let d = datum(Family::G2, 2);
        let t = apply_generator(&d, 1, &pi(&d, 1, a.clone())).map_err(|e| e.to_string())?;
        expect(&t, 1, &[(int(3), -1)])?;
        expect(&t, 2, &[(rat(3, 2), 1), (rat(1, 2), 1), (rat(-1, 2), 1)])?;
        let t = apply_generator(&d, 2, &pi(&d, 2, a.clone())).map_err(|e| e.to_string())?;
        expect(&t, 1, &[(rat(3, 2), 1)])?;
        expect(&t, 2, &[(int(1), -1)])?;
        Ok(())
    };
    report(7, "generator image claims", run());
}

#[test]
fn criterion_8_kr_oracle_equivalence() {
    let run = || -> Result<(), String> {
        for (family, rank) in [(Family::A, 1), (Family::A, 2), (Family::C, 2), (Family::G2, 2)] {
            let d = datum(family, rank);
            let w0 = longest_word(&d).map_err(|e| e.to_string())?;
            for b1 in 1..=rank {
                for b2 in 1..=rank {
                    for m1 in 1..=5u32 {
                        for m2 in 1..=(6 - m1) {
                            let via_shifts = kr_set(&d, &w0, b1, m1, b2, m2)
                                .map_err(|e| e.to_string())?;
                            let via_prefixes = kr_set_by_prefix(&d, &w0, b1, m1, b2, m2)
                                .map_err(|e| e.to_string())?;
                            if via_shifts.value_set() != via_prefixes.value_set() {
                                return Err(format!(
                                    "{family:?}{rank} ({b1},{m1};{b2},{m2}): {via_shifts} vs {via_prefixes}"
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    };
    report(8, "KR oracle equivalence", run());
}

#[test]
fn criterion_9_single_factor_consistency() {
    let run = || -> Result<(), String> {
        let a = SymbolicPoint::parameter("a");
        for (family, rank) in FAMILIES {
            let d = datum(family, rank);
            for j in 1..=rank {
                let image = apply_generator(&d, j, &pi(&d, j, a.clone()))
                    .map_err(|e| e.to_string())?;
                for i in 1..=rank {
                    if i == j {
                        continue;
                    }
                    let listed = single_factor_component(&d, i, j, &a)
                        .map_err(|e| e.to_string())?;
                    if *image.component(i) != listed {
                        return Err(format!(
                            "{family:?}{rank} (i={i}, j={j}): {} vs listed {listed}",
                            image.component(i)
                        ));
                    }
                }
            }
        }
        Ok(())
    };
    report(9, "single-factor image table", run());
}
