//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or exceeds its time limit.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use quiverc_core::linrep::{
    decompose, ext1_dim, hom_dim, is_indecomposable, reflect_minus, reflect_minus_mor, reflect_plus,
    reflect_plus_mor, simple_multiplicity_at_sink, strip_simple_summands, IndecCatalog, Morphism, Representation,
};
use quiverc_core::linrep::indec::{DEFAULT_END_GUARD, DEFAULT_INDEC_DIM_GUARD};
use quiverc_core::torsion::TorsionFreeClass;
use quiverc_core::weyl::{elements_up_to_length, simple_reflection};
use quiverc_core::{
    classify_vector, coxeter_of_quiver, enumerate_c_sortable, enumerate_tfc, is_c_sortable, positive_real_roots,
    sortable_of_tfc, tfc_of_sortable, verify_bijection, IntVector, LengthBound, Quiver, RootClass, WeylElement,
    Word,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{d4_centre_sink, field, kronecker, random_morphism, random_rep};

const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(1);
const LIMIT_3: Duration = Duration::from_secs(10);
const LIMIT_4: Duration = Duration::from_secs(5);
const LIMIT_5: Duration = Duration::from_secs(600);
const LIMIT_6: Duration = Duration::from_secs(30);
const LIMIT_7: Duration = Duration::from_secs(60);
const LIMIT_8: Duration = Duration::from_secs(60);
const LIMIT_9: Duration = Duration::from_secs(10);

const EULER_SAMPLES: usize = 200;
const EULER_MAX_DIM: usize = 3;
const REFLECTION_SAMPLES: usize = 100;
const REFLECTION_MAX_DIM: usize = 2;
const IMAGINARY_HEIGHT: i64 = 10;
const SEED: u64 = 0x5eed_0001;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn v(x: &[i64]) -> IntVector {
    IntVector::from_i64s(x)
}

fn set(xs: &[&[i64]]) -> BTreeSet<IntVector> {
    xs.iter().map(|x| v(x)).collect()
}

fn elem(q: &Quiver, word: &[usize]) -> WeylElement {
    WeylElement::from_word(q, &Word(word.to_vec())).unwrap()
}

fn a2_sink_first() -> Quiver {
    Quiver::new(2, &[(2, 1)]).unwrap()
}

fn catalan(n: u64) -> u64 {
    // C(2n+2, n+1) / (n+2)
    let (top, k) = (2 * n + 2, n + 1);
    let binom = (0..k).fold(1u64, |acc, j| acc * (top - j) / (j + 1));
    binom / (n + 2)
}

fn inversion_table() -> Outcome {
    let q = a2_sink_first();
    ensure(coxeter_of_quiver(&q).word() == &Word(vec![1, 2]), || "Coxeter element is not s1s2".into())?;
    let table: [(&[usize], BTreeSet<IntVector>); 6] = [
        (&[], set(&[])),
        (&[1], set(&[&[1, 0]])),
        (&[2], set(&[&[0, 1]])),
        (&[1, 2], set(&[&[1, 0], &[1, 1]])),
        (&[2, 1], set(&[&[0, 1], &[1, 1]])),
        (&[1, 2, 1], set(&[&[1, 0], &[1, 1], &[0, 1]])),
    ];
    let group = elements_up_to_length(&q, 10, 100).map_err(|e| e.to_string())?;
    ensure(group.len() == 6, || format!("group has {} elements", group.len()))?;
    for (word, expected) in &table {
        let w = elem(&q, word);
        ensure(group.contains(&w), || format!("{} missing from the group", w.word()))?;
        let got = w.inversion_set().as_set();
        ensure(&got == expected, || format!("inv({}) = {got:?}", w.word()))?;
    }
    Ok(())
}

fn reflection_table() -> Outcome {
    let q = Quiver::new(3, &[(1, 2), (3, 2)]).unwrap();
    let f = field(2);
    let expected: [(&[i64], &[i64]); 6] = [
        (&[0, 1, 0], &[0, 0, 0]),
        (&[1, 1, 0], &[1, 0, 0]),
        (&[0, 1, 1], &[0, 0, 1]),
        (&[1, 1, 1], &[1, 1, 1]),
        (&[1, 0, 0], &[1, 1, 0]),
        (&[0, 0, 1], &[0, 1, 1]),
    ];
    let catalog = IndecCatalog::new(&q, f).map_err(|e| e.to_string())?;
    ensure(catalog.len() == 6, || format!("{} indecomposables", catalog.len()))?;
    for (before, after) in expected {
        let m = catalog.get(&v(before)).ok_or_else(|| format!("no indecomposable {:?}", before))?;
        let r = reflect_plus(m, 2).map_err(|e| e.to_string())?;
        ensure(r.dim_vector() == v(after), || format!("R2+ {:?} = {}", before, r.dim_vector()))?;
    }
    Ok(())
}

fn sortable_counts() -> Outcome {
    let cases = [(Quiver::linear_a(2), 2u64), (Quiver::linear_a(3), 3), (Quiver::linear_a(4), 4)];
    for (base, n) in cases {
        let orientations = base.all_orientations();
        ensure(orientations.len() == 1 << (n - 1), || format!("A{n}: {} orientations", orientations.len()))?;
        for q in orientations {
            let count = enumerate_c_sortable(&q, LengthBound::Unbounded).map_err(|e| e.to_string())?.len() as u64;
            ensure(count == catalan(n), || format!("{q}: {count} sortable, expected {}", catalan(n)))?;
        }
    }
    ensure(catalan(2) == 5 && catalan(3) == 14 && catalan(4) == 42, || "Catalan formula".into())
}

fn torsion_table() -> Outcome {
    let q = a2_sink_first();
    let f = field(2);
    let rows: [(&[usize], BTreeSet<IntVector>); 5] = [
        (&[], set(&[])),
        (&[1], set(&[&[1, 0]])),
        (&[2], set(&[&[0, 1]])),
        (&[1, 2], set(&[&[1, 0], &[1, 1]])),
        (&[1, 2, 1], set(&[&[1, 0], &[1, 1], &[0, 1]])),
    ];
    let classes: BTreeSet<BTreeSet<IntVector>> =
        enumerate_tfc(&q, f).map_err(|e| e.to_string())?.into_iter().map(|c| c.roots().clone()).collect();
    let expected: BTreeSet<BTreeSet<IntVector>> = rows.iter().map(|(_, s)| s.clone()).collect();
    ensure(classes == expected, || format!("classes {classes:?}"))?;
    for (word, roots) in rows {
        let w = elem(&q, word);
        let fw = tfc_of_sortable(&q, f, &w).map_err(|e| e.to_string())?;
        ensure(fw.roots() == &roots, || format!("F({}) = {:?}", w.word(), fw.roots()))?;
        let class = TorsionFreeClass::new(&q, f, roots).map_err(|e| e.to_string())?;
        let back = sortable_of_tfc(&class, true).map_err(|e| e.to_string())?;
        ensure(back.word() == &Word(word.to_vec()), || format!("inverse gave {}", back.word()))?;
    }
    Ok(())
}

fn bijection() -> Outcome {
    let f2 = field(2);
    let d4 = d4_centre_sink();
    let families = [
        ("A1", Quiver::linear_a(1), Some(2)),
        ("A2", Quiver::linear_a(2), Some(5)),
        ("A3", Quiver::linear_a(3), Some(14)),
        ("A4", Quiver::linear_a(4), Some(42)),
        ("D4", d4.clone(), None),
    ];
    let mut d4_counts = BTreeSet::new();
    for (name, base, count) in &families {
        for q in base.all_orientations() {
            let report = verify_bijection(&q, f2).map_err(|e| e.to_string())?;
            ensure(report.pass, || format!("{name} {q}: {report:?}"))?;
            if let Some(c) = count {
                ensure(report.sortable_count == *c, || format!("{name} {q}: {} classes", report.sortable_count))?;
            } else {
                d4_counts.insert(report.sortable_count);
            }
        }
    }
    ensure(d4.all_orientations().len() == 8, || "D4 should have 8 orientations".into())?;
    // recount for D4 by testing every group element
    ensure(d4_counts.len() == 1, || format!("D4 counts differ by orientation: {d4_counts:?}"))?;
    let d4_count = *d4_counts.iter().next().unwrap();
    for q in d4.all_orientations() {
        let group = elements_up_to_length(&q, 64, 1000).map_err(|e| e.to_string())?;
        ensure(group.len() == 192, || format!("|W(D4)| = {}", group.len()))?;
        let mut sortable = 0;
        for w in &group {
            if is_c_sortable(&q, w).map_err(|e| e.to_string())? {
                sortable += 1;
            }
        }
        ensure(sortable == d4_count, || format!("{q}: recount {sortable} vs {d4_count}"))?;
    }
    // field robustness
    let f3 = field(3);
    for base in [Quiver::linear_a(2), Quiver::linear_a(3)] {
        for q in base.all_orientations() {
            let roots = |p| -> Result<Vec<BTreeSet<IntVector>>, String> {
                Ok(enumerate_tfc(&q, p).map_err(|e| e.to_string())?.into_iter().map(|c| c.roots().clone()).collect())
            };
            ensure(roots(f2)? == roots(f3)?, || format!("{q}: F2 and F3 classes differ"))?;
            let report = verify_bijection(&q, f3).map_err(|e| e.to_string())?;
            ensure(report.pass, || format!("{q} over F3: {report:?}"))?;
        }
    }
    println!("    D4 sortable elements = torsion-free classes = {d4_count}");
    Ok(())
}

fn euler_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut quivers = Quiver::linear_a(2).all_orientations();
    quivers.extend(Quiver::linear_a(3).all_orientations());
    quivers.push(kronecker());
    for q in &quivers {
        for p in [2, 3] {
            let f = field(p);
            for _ in 0..EULER_SAMPLES {
                let a = random_rep(&mut rng, q, f, EULER_MAX_DIM);
                let b = random_rep(&mut rng, q, f, EULER_MAX_DIM);
                let lhs = hom_dim(&a, &b).unwrap() as i64 - ext1_dim(&a, &b).unwrap() as i64;
                let rhs = q.euler_form(&a.dim_vector(), &b.dim_vector()).unwrap();
                ensure(BigInt::from(lhs) == rhs, || {
                    format!("{q} F{p}: {} vs {}: {lhs} ≠ {rhs}", a.dim_vector(), b.dim_vector())
                })?;
            }
        }
    }
    Ok(())
}

fn same_morphism(a: &Morphism, b: &Morphism) -> bool {
    a.source() == b.source() && a.target() == b.target() && a.comps() == b.comps()
}

fn reflection_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut quivers = vec![a2_sink_first()];
    quivers.extend(Quiver::linear_a(3).all_orientations());
    quivers.push(d4_centre_sink());
    for q in &quivers {
        let i = q.sinks()[0];
        let q_rev = q.mutate_at(i).unwrap();
        for p in [2, 3] {
            let f = field(p);
            let s_i = Representation::simple(&q_rev, f, i).unwrap();
            let mut accepted = 0;
            let mut attempts = 0;
            while accepted < REFLECTION_SAMPLES {
                attempts += 1;
                ensure(attempts < 100 * REFLECTION_SAMPLES, || format!("{q}: sampler starved"))?;
                let x = random_rep(&mut rng, q, f, REFLECTION_MAX_DIM);
                if x.is_zero() || simple_multiplicity_at_sink(&x, i).unwrap() != 0 {
                    continue;
                }
                accepted += 1;
                let rx = reflect_plus(&x, i).unwrap();
                let expected = simple_reflection(q, i, &x.dim_vector()).unwrap();
                ensure(rx.dim_vector() == expected, || format!("{q}: dim R+({}) = {}", x.dim_vector(), rx.dim_vector()))?;
                let stripped = strip_simple_summands(&x, i).unwrap();
                ensure(decompose(&stripped).unwrap() == decompose(&x).unwrap(), || {
                    format!("{q}: R-R+ changed {}", x.dim_vector())
                })?;
                ensure(hom_dim(&s_i, &rx).unwrap() == 0, || format!("{q}: Hom(S{i}, R+V) ≠ 0"))?;

                // functor laws, on arbitrary representations
                let u = random_rep(&mut rng, q, f, REFLECTION_MAX_DIM);
                let w = random_rep(&mut rng, q, f, REFLECTION_MAX_DIM);
                let a = random_morphism(&mut rng, &u, &x);
                let b = random_morphism(&mut rng, &x, &w);
                let lhs = reflect_plus_mor(&a.then(&b).unwrap(), i).unwrap();
                let rhs = reflect_plus_mor(&a, i).unwrap().then(&reflect_plus_mor(&b, i).unwrap()).unwrap();
                ensure(same_morphism(&lhs, &rhs), || format!("{q}: R+ does not preserve composition"))?;
                let id = reflect_plus_mor(&Morphism::identity(&x), i).unwrap();
                ensure(same_morphism(&id, &Morphism::identity(&rx)), || format!("{q}: R+ does not preserve identities"))?;

                let ru = reflect_plus(&u, i).unwrap();
                let c = random_morphism(&mut rng, &ru, &rx);
                let d = random_morphism(&mut rng, &rx, &s_i);
                let lhs = reflect_minus_mor(&c.then(&d).unwrap(), i).unwrap();
                let rhs = reflect_minus_mor(&c, i).unwrap().then(&reflect_minus_mor(&d, i).unwrap()).unwrap();
                ensure(same_morphism(&lhs, &rhs), || format!("{q}: R- does not preserve composition"))?;
                let id = reflect_minus_mor(&Morphism::identity(&rx), i).unwrap();
                let back = reflect_minus(&rx, i).unwrap();
                ensure(same_morphism(&id, &Morphism::identity(&back)), || format!("{q}: R- does not preserve identities"))?;
            }
        }
    }
    Ok(())
}

fn gabriel_counts() -> Outcome {
    let f = field(2);
    let cases = [
        (Quiver::linear_a(1), 1),
        (Quiver::linear_a(2), 3),
        (Quiver::new(3, &[(1, 2), (3, 2)]).unwrap(), 6),
        (Quiver::linear_a(4), 10),
        (d4_centre_sink(), 12),
    ];
    for (q, count) in cases {
        let catalog = IndecCatalog::new(&q, f).map_err(|e| e.to_string())?;
        ensure(catalog.len() == count, || format!("{q}: {} indecomposables", catalog.len()))?;
        let dims: BTreeSet<IntVector> = catalog.entries().iter().map(|(_, m)| m.dim_vector()).collect();
        ensure(dims.len() == count, || format!("{q}: repeated dimension vectors"))?;
        for (root, m) in catalog.entries() {
            ensure(&m.dim_vector() == root, || format!("{q}: built {} for {root}", m.dim_vector()))?;
            let indec = is_indecomposable(m, DEFAULT_INDEC_DIM_GUARD, DEFAULT_END_GUARD).map_err(|e| e.to_string())?;
            ensure(indec, || format!("{q}: M{root} decomposes"))?;
        }
        // non-isomorphic: an isomorphism would need equal dimension vectors,
        // and End of each is one-dimensional
        for (k, row) in catalog.hom_matrix().iter().enumerate() {
            ensure(row[k] == 1, || format!("{q}: End of entry {k} has dimension {}", row[k]))?;
        }
    }
    Ok(())
}

/// Nonzero nonnegative vectors of height at most `h`.
fn vectors_up_to_height(n: usize, h: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            if cur.iter().any(|&x| x != 0) {
                out.push(cur.clone());
            }
            return;
        }
        for x in 0..=left {
            cur.push(x);
            go(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, h, &mut Vec::new(), &mut out);
    out
}

fn imaginary_classification() -> Outcome {
    let classify = |q: &Quiver, x: &[i64]| classify_vector(q, &v(x), 64).map_err(|e| e.to_string());
    ensure(classify(&kronecker(), &[1, 1])? == RootClass::Imaginary, || "Kronecker (1,1)".into())?;
    ensure(classify(&Quiver::linear_a(2), &[2, 0])? == RootClass::NotARoot, || "A2 (2,0)".into())?;
    ensure(classify(&Quiver::linear_a(2), &[1, 1])? == RootClass::RealPositive, || "A2 (1,1)".into())?;
    let dynkin = [
        Quiver::linear_a(1),
        Quiver::linear_a(2),
        Quiver::linear_a(3),
        Quiver::new(3, &[(1, 2), (3, 2)]).unwrap(),
        Quiver::linear_a(4),
        d4_centre_sink(),
        Quiver::new(5, &[(1, 2), (2, 3), (4, 3), (3, 5)]).unwrap(),
        Quiver::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (6, 3)]).unwrap(),
    ];
    for q in &dynkin {
        ensure(q.dynkin_type().is_dynkin(), || format!("{q} is not Dynkin"))?;
        let roots = positive_real_roots(q, IMAGINARY_HEIGHT as usize).map_err(|e| e.to_string())?.roots;
        for x in vectors_up_to_height(q.n(), IMAGINARY_HEIGHT) {
            let alpha = v(&x);
            let class = classify(q, &x)?;
            ensure(class != RootClass::Imaginary, || format!("{q}: {alpha} classified imaginary"))?;
            // positive roots of a Dynkin quiver are the positive solutions of
            // ⟨α, α⟩ = 1
            let tits_one = q.euler_form(&alpha, &alpha).unwrap() == BigInt::from(1);
            let real = class == RootClass::RealPositive;
            ensure(real == tits_one && real == roots.contains(&alpha), || {
                format!("{q}: {alpha} classified {class:?}, quadratic form one: {tits_one}")
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("A2 inversion-set table", LIMIT_1, inversion_table),
        ("A3 reflection-functor table", LIMIT_2, reflection_table),
        ("sortable counts 5 / 14 / 42", LIMIT_3, sortable_counts),
        ("torsion-free classes of 1<-2", LIMIT_4, torsion_table),
        ("bijection on A1-A4 and D4", LIMIT_5, bijection),
        ("Euler identity on random pairs", LIMIT_6, euler_identity),
        ("reflection functor properties", LIMIT_7, reflection_suite),
        ("Gabriel counts 1 / 3 / 6 / 10 / 12", LIMIT_8, gabriel_counts),
        ("imaginary-root classification", LIMIT_9, imaginary_classification),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(run)) {
            Ok(r) => r,
            Err(panic) => Err(panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into())),
        };
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= *limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}): {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
