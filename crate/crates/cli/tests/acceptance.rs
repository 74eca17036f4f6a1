//! Acceptance suite: one PASS/FAIL line per criterion, with the time taken
//! against a fixed budget. Exits non-zero if any criterion fails.

mod common;

#[allow(dead_code)]
#[path = "../../core/tests/common/box_oracle.rs"]
mod box_oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rectrep::charcalc::{character_of, weyl_dimension};
use rectrep::classify::{
    canonical_form, catalogue_items, catalogue_lengths, catalogue_spec, enumerate_for_algebra,
    long_roots_3space_census, roots_in_plane_census, verify_classification, verify_howe,
    CatalogueItem, EnumeratedRep,
};
use rectrep::exactlin::random_unimodular;
use rectrep::liealg::to_orthogonal;
use rectrep::rectkit::{detect_rectangular, lengths};
use rectrep::{Family, IntVector, RepSpec, SemisimpleAlgebra, SimpleType, Weight, WeightMultiset};
use rectrep_cli::parse::parse_spec;

/// Unimodular draws and translations in criterion 6.
const SEEDED_TRIALS: u64 = 1000;
/// Largest absolute entry of the random unimodular matrices.
const UNIMODULAR_ENTRY_BOUND: u64 = 3;
/// Coordinate range of the exhaustive planar sets and of the translations.
const PLANAR_BOUND: i64 = 3;
const PLANAR_MAX_POINTS: usize = 12;
/// Dimension bound of the multiplicity-free survey.
const HOWE_MAX_DIM: u64 = 128;

type Outcome = Result<String, String>;

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Duration,
    run: fn(&mut Shared) -> Outcome,
}

/// Enumerations reused by the corollary criterion.
#[derive(Default)]
struct Shared {
    enumerated: Vec<EnumeratedRep>,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(s: &str) -> num_rational::BigRational {
    s.parse().unwrap()
}

/// Orthogonal coordinates of every weight, each with multiplicity one.
fn orthogonal_weights(algebra: &str, rep: &str) -> Result<BTreeSet<Vec<num_rational::BigRational>>, String> {
    let (alg, spec) = parse_spec(algebra, rep).map_err(|e| e.to_string())?;
    let c = character_of(&spec).map_err(|e| e.to_string())?;
    let mut out = BTreeSet::new();
    for (w, m) in c.iter() {
        ensure(*m == BigUint::from(1u32), || format!("{algebra} {rep}: multiplicity {m}"))?;
        out.insert(to_orthogonal(&alg, w, 0).map_err(|e| e.to_string())?.coords().to_vec());
    }
    ensure(out.len() == c.len(), || "repeated orthogonal images".into())?;
    Ok(out)
}

fn sign_vectors(n: usize, half: &str) -> BTreeSet<Vec<num_rational::BigRational>> {
    (0..1u32 << n)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { -q(half) } else { q(half) })
                .collect()
        })
        .collect()
}

fn catalogue_characters() -> Outcome {
    let b3 = orthogonal_weights("B3", "spin")?;
    ensure(b3 == sign_vectors(3, "1/2"), || format!("B3 spin weights {b3:?}"))?;

    let b2 = orthogonal_weights("B2", "std + spin")?;
    let mut want = sign_vectors(2, "1/2");
    for v in [["1", "0"], ["-1", "0"], ["0", "1"], ["0", "-1"], ["0", "0"]] {
        want.insert(v.iter().map(|s| q(s)).collect());
    }
    ensure(b2 == want, || format!("B2 std + spin weights {b2:?}"))?;

    // A3 weights live in the sum-zero hyperplane of Q^4; the D3 model sends
    // x to (x1+x2, x1+x3, x1+x4), where they must be the cube's vertices.
    let a3 = orthogonal_weights("A3", "std + dual(std)")?;
    let cube: BTreeSet<_> = a3
        .iter()
        .map(|x| vec![&x[0] + &x[1], &x[0] + &x[2], &x[0] + &x[3]])
        .collect();
    ensure(a3.len() == 8 && cube == sign_vectors(3, "1/2"), || format!("A3 weights {a3:?}"))?;
    Ok("B3 spin 8, B2 std+spin 9, A3 std+dual 8 weights match".into())
}

fn multiset_of(spec: &RepSpec) -> WeightMultiset {
    WeightMultiset::from_character(&character_of(spec).unwrap())
}

fn lengths_table() -> Outcome {
    let items = catalogue_items(6, 128);
    for &item in &items {
        let (alg, spec) = catalogue_spec(item).map_err(|e| e.to_string())?;
        let cert = detect_rectangular(&multiset_of(&spec)).ok_or(format!("{item} not rectangular"))?;
        let got = lengths(&cert.padded_to(alg.rank()));
        ensure(got == catalogue_lengths(item), || {
            format!("{item}: detected {got:?}, table {:?}", catalogue_lengths(item))
        })?;
    }
    ensure(catalogue_lengths(CatalogueItem::B2StdSpin) == [3, 3], || "B2StdSpin".into())?;
    ensure(catalogue_lengths(CatalogueItem::D2Spin) == [2, 2], || "D2Spin".into())?;
    Ok(format!("{} items agree", items.len()))
}

fn classification(shared: &mut Shared) -> Outcome {
    let mut notes = Vec::new();
    for (rank, dim) in [(2, 64), (3, 128)] {
        let start = Instant::now();
        let r = verify_classification(rank, dim).map_err(|e| e.to_string())?;
        ensure(r.equal(), || {
            format!(
                "({rank},{dim}): {} missing from enumeration, {} missing from catalogue",
                r.missing_from_enumeration.len(),
                r.missing_from_catalogue.len()
            )
        })?;
        ensure(r.decompose_failures.is_empty(), || {
            format!("({rank},{dim}): decomposition failures {:?}", r.decompose_failures)
        })?;
        ensure(start.elapsed() < Duration::from_secs(300), || format!("({rank},{dim}) over 5 min"))?;
        notes.push(format!("({rank},{dim}) {} = {}", r.enumerated.len(), r.catalogue_size));
        shared.enumerated.extend(r.enumerated);
    }
    Ok(notes.join(", "))
}

fn a3_uniqueness(shared: &mut Shared) -> Outcome {
    let a3 = SemisimpleAlgebra::simple(SimpleType::new(Family::A, 3).unwrap());
    let found = enumerate_for_algebra(&a3, 256).map_err(|e| e.to_string())?;
    let hypercubic: Vec<&RepSpec> = found
        .iter()
        .filter(|e| e.lengths.windows(2).all(|w| w[0] == w[1]))
        .map(|e| &e.spec)
        .collect();
    let (_, want) = catalogue_spec(CatalogueItem::A3StdDual).unwrap();
    ensure(hypercubic == [&canonical_form(&want)], || format!("hypercubic specs {hypercubic:?}"))?;
    let n = found.len();
    shared.enumerated.extend(found);
    Ok(format!("only std + dual(std) among {n} rectangular specs"))
}

fn fundamental(n: usize, i: usize, k: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i - 1] = k;
    v
}

/// Highest weights of the listed multiplicity-free irreducibles (Bourbaki
/// labels), trivial included, cut to the dimension bound.
fn listed_multiplicity_free(t: SimpleType, max_dim: u64) -> BTreeSet<Vec<i64>> {
    let n = t.rank();
    let mut out = BTreeSet::from([vec![0; n]]);
    match t.family() {
        Family::A => {
            for m in 1..=n {
                out.insert(fundamental(n, m, 1));
            }
            for m in 1..=max_dim as i64 {
                out.insert(fundamental(n, 1, m));
                out.insert(fundamental(n, n, m));
            }
        }
        Family::B => {
            out.insert(fundamental(n, 1, 1));
            out.insert(fundamental(n, n, 1));
        }
        Family::C => {
            out.insert(fundamental(n, 1, 1));
            if n <= 3 {
                out.insert(fundamental(n, n, 1));
            }
        }
        Family::D => {
            out.extend([fundamental(n, 1, 1), fundamental(n, n - 1, 1), fundamental(n, n, 1)]);
        }
        Family::G => {
            out.insert(fundamental(n, 1, 1));
        }
        Family::E | Family::F => {}
    }
    let alg = SemisimpleAlgebra::simple(t);
    out.into_iter()
        .filter(|v| weyl_dimension(&alg, &Weight::from_i64s(v)).unwrap() <= BigUint::from(max_dim))
        .collect()
}

fn howe() -> Outcome {
    let types = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
        (Family::F, 4),
    ];
    let mut total = 0;
    for (f, r) in types {
        let t = SimpleType::new(f, r).unwrap();
        let report = verify_howe(t, HOWE_MAX_DIM).map_err(|e| e.to_string())?;
        let flagged: BTreeSet<Vec<i64>> = report
            .flagged()
            .iter()
            .map(|e| e.highest_weight.to_i64s().unwrap())
            .collect();
        let listed = listed_multiplicity_free(t, HOWE_MAX_DIM);
        ensure(report.ok() && flagged == listed, || {
            format!("{t}: flagged {flagged:?}, listed {listed:?}")
        })?;
        if f == Family::F {
            ensure(flagged.len() == 1, || "F4 flags a non-trivial representation".into())?;
        }
        if f == Family::C {
            let dims: Vec<BigUint> = report.flagged().iter().map(|e| e.dimension.clone()).collect();
            ensure(dims.contains(&BigUint::from(14u32)), || "C3 misses the 14-dimensional".into())?;
        }
        total += flagged.len();
    }
    Ok(format!("{} types, {total} flagged representations as listed", types.len()))
}

/// The 20 catalogue characters used by the seeded checks.
fn seeded_items() -> Vec<CatalogueItem> {
    use CatalogueItem::*;
    vec![
        A1Sym(1),
        A1Sym(2),
        A1Sym(3),
        A1Sym(6),
        A1Sym(10),
        A1PairSym(1, 0),
        A1PairSym(2, 1),
        A1PairSym(5, 4),
        D2Spin,
        B2StdSpin,
        BmSpin(2),
        BmSpin(3),
        BmSpin(4),
        BmSpin(5),
        A3StdDual,
        D4Spin,
        D4StdSpinPlus,
        D4StdSpinMinus,
        DmSpin(5),
        DmSpin(6),
    ]
}

/// Calls `f` on every centrally symmetric subset of the planar grid with at
/// most `PLANAR_MAX_POINTS` points.
fn for_each_planar_set(mut f: impl FnMut(&BTreeSet<Vec<i64>>)) {
    let reps: Vec<Vec<i64>> = (-PLANAR_BOUND..=PLANAR_BOUND)
        .flat_map(|x| (-PLANAR_BOUND..=PLANAR_BOUND).map(move |y| vec![x, y]))
        .filter(|p| *p > vec![-p[0], -p[1]])
        .collect();
    fn rec(
        reps: &[Vec<i64>],
        start: usize,
        room: usize,
        set: &mut BTreeSet<Vec<i64>>,
        f: &mut dyn FnMut(&BTreeSet<Vec<i64>>),
    ) {
        f(set);
        if room < 2 {
            return;
        }
        for i in start..reps.len() {
            let p = reps[i].clone();
            let neg = vec![-p[0], -p[1]];
            set.insert(p.clone());
            set.insert(neg.clone());
            rec(reps, i + 1, room - 2, set, f);
            set.remove(&p);
            set.remove(&neg);
        }
    }
    let mut set = BTreeSet::new();
    rec(&reps, 0, PLANAR_MAX_POINTS, &mut set, &mut f);
    set.insert(vec![0, 0]);
    rec(&reps, 0, PLANAR_MAX_POINTS - 1, &mut set, &mut f);
}

fn rectangularity_properties() -> Outcome {
    let mut sets = 0u64;
    let mut rectangular = 0u64;
    let mut disagreements = Vec::new();
    for_each_planar_set(|pts| {
        sets += 1;
        let s = WeightMultiset::from_points(2, pts.iter().map(|p| IntVector::from_i64s(p)));
        let ours = detect_rectangular(&s).map(|c| lengths(&c));
        let oracle = box_oracle::box_lengths(pts);
        rectangular += u64::from(oracle.is_some());
        if ours != oracle && disagreements.len() < 5 {
            disagreements.push(format!("{pts:?}: detected {ours:?}, oracle {oracle:?}"));
        }
    });
    ensure(disagreements.is_empty(), || format!("(a) {disagreements:?}"))?;

    let multisets: Vec<WeightMultiset> = seeded_items()
        .into_iter()
        .map(|i| multiset_of(&catalogue_spec(i).unwrap().1))
        .collect();
    let base: Vec<Option<Vec<u64>>> = multisets
        .iter()
        .map(|s| detect_rectangular(s).map(|c| lengths(&c)))
        .collect();
    for seed in 0..SEEDED_TRIALS {
        let k = (seed % multisets.len() as u64) as usize;
        let s = &multisets[k];
        let m = random_unimodular(s.dim(), seed, UNIMODULAR_ENTRY_BOUND);
        let moved = detect_rectangular(&s.transform(&m)).map(|c| lengths(&c));
        ensure(base[k].is_some() && moved == base[k], || {
            format!("(b) seed {seed}: {moved:?} vs {:?}", base[k])
        })?;
    }
    for seed in 0..SEEDED_TRIALS {
        let k = (seed % multisets.len() as u64) as usize;
        let s = &multisets[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = loop {
            let t: Vec<i64> = (0..s.dim()).map(|_| rng.gen_range(-PLANAR_BOUND..=PLANAR_BOUND)).collect();
            if t.iter().any(|&x| x != 0) {
                break t;
            }
        };
        ensure(detect_rectangular(&s.translate(&IntVector::from_i64s(&t))).is_none(), || {
            format!("(c) seed {seed}: translate by {t:?} accepted")
        })?;
    }
    Ok(format!(
        "(a) {sets} planar sets, {rectangular} rectangular, 0 disagreements; (b) {SEEDED_TRIALS} transforms; (c) {SEEDED_TRIALS} translations"
    ))
}

fn censuses() -> Outcome {
    let mut notes = Vec::new();
    for n in 2..=4 {
        let planes = roots_in_plane_census(n).map_err(|e| e.to_string())?;
        ensure(planes.violations.is_empty(), || format!("B{n} plane violations {:?}", planes.violations))?;
        notes.push(format!("B{n}: {} planes", planes.planes));
        if n >= 3 {
            let spaces = long_roots_3space_census(n).map_err(|e| e.to_string())?;
            ensure(spaces.violations.is_empty(), || format!("B{n} space violations {:?}", spaces.violations))?;
            ensure(spaces.complements.iter().all(|r| r.long_roots == 12), || {
                format!("B{n}: complement spaces {:?}", spaces.complements)
            })?;
            if n == 4 {
                ensure(spaces.complements.len() == 8, || {
                    format!("B4: {} complement spaces", spaces.complements.len())
                })?;
            }
            notes.push(format!("{} spaces, {} complements", spaces.spaces, spaces.complements.len()));
        }
    }
    Ok(notes.join(", "))
}

fn corollaries(shared: &mut Shared) -> Outcome {
    ensure(!shared.enumerated.is_empty(), || "no enumeration results to check".into())?;
    for e in &shared.enumerated {
        let count = e.spec.num_constituents();
        ensure(count.count_ones() == 1, || format!("{:?}: {count} summands", e.spec))?;
        let factors = e.spec.algebra().factors();
        let allowed = factors.iter().all(|t| match t.family() {
            Family::A => t.rank() == 1 || t.rank() == 3,
            Family::B => t.rank() >= 2,
            Family::D => t.rank() >= 4,
            _ => false,
        });
        ensure(allowed, || format!("{:?}: factor types", e.spec))?;
        let twos = e.lengths.iter().filter(|&&l| l == 2).count();
        if twos <= 1 && e.lengths.iter().all(|l| l % 2 == 0) {
            let pure_a1 = factors.iter().all(|t| t.family() == Family::A && t.rank() == 1);
            let single = matches!(e.spec.summands(), [(_, m)] if *m == BigUint::from(1u32));
            let mut sym_lengths: Vec<u64> = e.spec.summands()[0]
                .0
                .to_i64s()
                .unwrap()
                .iter()
                .map(|&r| r as u64 + 1)
                .collect();
            sym_lengths.sort_unstable();
            ensure(pure_a1 && single && sym_lengths == e.lengths, || {
                format!("{:?}: even lengths {:?} but not a tensor of symmetric powers", e.spec, e.lengths)
            })?;
        }
    }
    Ok(format!("{} enumerated specs, 0 violations", shared.enumerated.len()))
}

fn cli_contract() -> Outcome {
    let mut by_command: BTreeMap<&str, (bool, bool)> = BTreeMap::new();
    for case in common::CASES {
        let (code, first) = common::run_binary(case.args);
        let (code2, second) = common::run_binary(case.args);
        ensure(first == second && code == code2, || format!("{}: output differs between runs", case.name))?;
        ensure(code == case.code, || format!("{}: exit {code}, expected {}", case.name, case.code))?;
        let golden = std::fs::read(common::golden_path(case.name)).map_err(|e| format!("{}: {e}", case.name))?;
        ensure(golden == first, || format!("{}: differs from snapshot", case.name))?;
        let entry = by_command.entry(case.args[0]).or_default();
        if code == 0 {
            entry.0 = true;
        } else {
            entry.1 = true;
        }
    }
    for command in ["char", "rect", "decompose", "enumerate", "verify-catalogue", "verify-howe", "census"] {
        ensure(by_command.get(command) == Some(&(true, true)), || {
            format!("{command} lacks a positive or negative case")
        })?;
    }
    Ok(format!("{} cases, each run twice", common::CASES.len()))
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "catalogue characters", budget: Duration::from_secs(1), run: |_| catalogue_characters() },
    Criterion { number: 2, title: "lengths table", budget: Duration::from_secs(10), run: |_| lengths_table() },
    Criterion { number: 3, title: "classification equality", budget: Duration::from_secs(600), run: classification },
    Criterion { number: 4, title: "A3 uniqueness", budget: Duration::from_secs(120), run: a3_uniqueness },
    Criterion { number: 5, title: "multiplicity-free survey", budget: Duration::from_secs(300), run: |_| howe() },
    Criterion { number: 6, title: "rectangularity properties", budget: Duration::from_secs(300), run: |_| rectangularity_properties() },
    Criterion { number: 7, title: "root-geometry censuses", budget: Duration::from_secs(60), run: |_| censuses() },
    Criterion { number: 8, title: "structural corollaries", budget: Duration::MAX, run: corollaries },
    Criterion { number: 9, title: "CLI contract", budget: Duration::from_secs(30), run: |_| cli_contract() },
];

fn main() {
    let mut shared = Shared::default();
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (c.run)(&mut shared)))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > c.budget => Err(format!("took {elapsed:.2?}, budget {:.0?}", c.budget)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {} ({}): PASS [{elapsed:.2?}] {detail}", c.number, c.title),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({}): FAIL [{elapsed:.2?}] {detail}", c.number, c.title);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
