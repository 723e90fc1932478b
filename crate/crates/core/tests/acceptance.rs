//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use aalpha::closed_forms::{universal_multiplicity_bound, NamedFamily, PowerGroupKind};
use aalpha::graph::Graph;
use aalpha::number_theory::{is_prime, totient, Factorization};
use aalpha::partitions::{quotient_matrix, BlockSymmetricSpec, MatrixKind, VertexPartition};
use aalpha::spectra::{
    a_alpha_matrix, adjacency_matrix, degree_matrix, eig_quotient, eig_symmetric, laplacian_matrix,
    multiplicity_of, signless_laplacian_matrix, spectra_match, Alpha, Spectrum,
};
use aalpha::transcribed;
use aalpha::verify::{self, Suite, SweepSummary, ALPHA_GRID, DEFAULT_SEED};
use aalpha::{Family, Result};

const TOL: f64 = 1e-8;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { pass, detail })
}

fn sweep(suite: Suite) -> Result<(SweepSummary, Vec<Family>)> {
    let families = suite.instances(DEFAULT_SEED)?;
    let reports = verify::run_sweep(&families, &ALPHA_GRID, TOL)?;
    for r in reports.iter().filter(|r| !r.matched) {
        println!("    mismatch: {} alpha={} max_error={:?} {:?}", r.case, r.alpha, r.max_error, r.failure);
    }
    Ok((SweepSummary::of(&reports), families))
}

fn ratio(s: &SweepSummary) -> String {
    format!("{}/{}", s.matched, s.total)
}

fn c1_joined_union() -> Result<Outcome> {
    let (s, _) = sweep(Suite::JoinedUnionRandom)?;
    outcome(s.all_matched() && s.total == 250, format!("{} random joined unions x alpha matched", ratio(&s)))
}

fn c2_power_cyclic() -> Result<Outcome> {
    let (s, _) = sweep(Suite::PowerCyclic)?;
    let mut exact = 0;
    let mut checked = 0;
    for n in 3..=60u64 {
        if !Factorization::of(n)?.is_prime_power() {
            continue;
        }
        let g = Family::PowerCyclic { n }.graph()?;
        for &a in &ALPHA_GRID {
            let alpha = Alpha::new(a)?;
            let direct = eig_symmetric(&a_alpha_matrix(&g, &alpha))?;
            let mut expected = vec![a * n as f64 - 1.0; n as usize - 1];
            expected.push(n as f64 - 1.0);
            checked += 1;
            if spectra_match(&direct, &Spectrum::from_values(expected), 1e-10).matched {
                exact += 1;
            }
        }
    }
    outcome(
        s.all_matched() && exact == checked,
        format!("{} P(Z_n) cases matched; prime powers {exact}/{checked} equal {{n-1, (an-1)^(n-1)}} to 1e-10", ratio(&s)),
    )
}

fn c3_pq_pqr() -> Result<Outcome> {
    let (s, _) = sweep(Suite::PqPqr)?;
    let mut pq_ok = 0;
    let mut pq_total = 0;
    for (p, q) in [(2, 3), (2, 5), (3, 5), (3, 7), (5, 7)] {
        for &a in &ALPHA_GRID {
            pq_total += 1;
            pq_ok += usize::from(verify::check_qmat_pq(p, q, a)?.agrees);
        }
    }
    let mut pqr_ok = 0;
    let mut pqr_total = 0;
    let mut worst = None;
    for (p, q, r) in [(2, 3, 5), (2, 3, 7)] {
        for &a in &ALPHA_GRID {
            let f = verify::check_qmat_pqr(p, q, r, a)?;
            pqr_total += 1;
            if f.agrees {
                pqr_ok += 1;
            } else if worst.is_none() {
                worst = Some(format!("{}: {}", f.name, f.detail));
            }
        }
    }
    let pass = s.all_matched() && pq_ok == pq_total && pqr_ok == pqr_total;
    let mut detail = format!(
        "generic spectra {}; printed pq matrix {pq_ok}/{pq_total} entrywise equal; printed pqr matrix {pqr_ok}/{pqr_total}",
        ratio(&s)
    );
    if let Some(w) = worst {
        detail.push_str(&format!("; first disagreement {w}"));
    }
    outcome(pass, detail)
}

/// `n = p q^N` with `p` the prime of exponent one.
fn split_pq_power(n: u64) -> Result<(u64, u64, u32)> {
    let f = Factorization::of(n)?;
    match f.pairs() {
        [(a, 1), (b, e)] if *e >= 2 => Ok((*a, *b, *e)),
        [(a, e), (b, 1)] if *e >= 2 => Ok((*b, *a, *e)),
        _ => Err(aalpha::Error::InvalidParameter(format!("{n} is not p*q^N"))),
    }
}

fn c4_pq_power() -> Result<Outcome> {
    let (s, families) = sweep(Suite::PqPower)?;
    let mut mult_ok = 0;
    let mut listed_bad = Vec::new();
    for f in &families {
        let Family::PowerCyclic { n } = f else { unreachable!() };
        let (p, q, big_n) = split_pq_power(*n)?;
        mult_ok += usize::from(verify::pq_power_multiplicities_agree(p, q, big_n)?);
        for a in [0.25, 0.5, 0.75] {
            for t in verify::check_pq_power_listed(p, q, big_n, a)? {
                if !t.agrees {
                    listed_bad.push(format!("{} ({})", t.name, t.detail));
                }
            }
        }
    }
    let mut detail = format!(
        "generic spectra {}; phi multiplicity lists {mult_ok}/{} agree",
        ratio(&s),
        families.len()
    );
    if !listed_bad.is_empty() {
        detail.push_str(&format!(
            "; erratum finding, written eigenvalue terms off in {} cases, e.g. {}",
            listed_bad.len(),
            listed_bad[0]
        ));
    }
    outcome(s.all_matched() && mult_ok == families.len(), detail)
}

fn c5_dihedral() -> Result<Outcome> {
    let (s, _) = sweep(Suite::Dihedral)?;
    let mut agree = 0;
    let mut explained = 0;
    let mut total = 0;
    let mut example = None;
    for n in [3, 4, 5, 7, 8, 9] {
        for &a in &ALPHA_GRID {
            total += 1;
            let cubic = verify::check_dihedral_cubic(n, a)?;
            if cubic.agrees {
                agree += 1;
                continue;
            }
            // the cubic is the characteristic polynomial of the printed
            // matrix, which differs from the generic one in entry (1, 0) only
            let alpha = Alpha::new(a)?;
            let printed = transcribed::qmat_dihedral(n, &alpha)?;
            let cp = aalpha::spectra::characteristic_polynomial(&printed);
            let coeffs = transcribed::dihedral_cubic(n, &alpha)?;
            let same_poly = cp.iter().zip(coeffs).all(|(x, y)| (x - y).abs() <= 1e-9 * x.abs().max(1.0));
            let m = verify::check_dihedral_matrix(n, a)?;
            if same_poly && m.detail.starts_with("worst entry (1, 0)") {
                explained += 1;
                example.get_or_insert_with(|| format!("{}: {}", cubic.name, m.detail));
            }
        }
    }
    let detail = format!(
        "generic spectra {}; printed cubic agrees in {agree}/{total} cases, erratum finding in {explained}: \
         printed cubic is the characteristic polynomial of a matrix with entry (1,0) = (1-a)(n-2) instead of (1-a)(n-1), e.g. {}",
        ratio(&s),
        example.unwrap_or_default()
    );
    outcome(s.all_matched() && agree + explained == total, detail)
}

fn c6_quaternion() -> Result<Outcome> {
    let (s, _) = sweep(Suite::Quaternion)?;
    let mut ok = 0;
    let mut total = 0;
    let mut first = None;
    for n in [2, 4, 8] {
        for &a in &ALPHA_GRID {
            total += 1;
            let f = verify::check_quaternion_statement(n, a)?;
            if f.agrees {
                ok += 1;
            } else {
                first.get_or_insert_with(|| format!("{}: {}", f.name, f.detail.split(';').next().unwrap_or("")));
            }
        }
    }
    let mut detail = format!("stated list plus printed 3x3 matched direct in {ok}/{total}; generic prediction {}", ratio(&s));
    if let Some(f) = first {
        detail.push_str(&format!("; {f}"));
    }
    outcome(ok == total && s.all_matched(), detail)
}

fn c7_elementary_abelian() -> Result<Outcome> {
    let (s, _) = sweep(Suite::ElementaryAbelian)?;
    let mut ok = 0;
    let mut total = 0;
    for (p, k) in [(2usize, 2u32), (2, 3), (3, 2), (5, 1), (3, 3)] {
        let g = Family::PowerGroup(PowerGroupKind::ElementaryAbelian { p, k }).graph()?;
        let l = (p.pow(k) - 1) / (p - 1);
        for &a in &ALPHA_GRID {
            let alpha = Alpha::new(a)?;
            let direct = eig_symmetric(&a_alpha_matrix(&g, &alpha))?;
            total += 1;
            ok += usize::from(multiplicity_of(&direct, a * p as f64 - 1.0, TOL) >= l * (p - 2));
        }
    }
    outcome(
        s.all_matched() && ok == total,
        format!("quotient-path spectra {}; multiplicity of ap-1 >= l(p-2) in {ok}/{total}", ratio(&s)),
    )
}

fn c8_multiplicity_bound() -> Result<Outcome> {
    let mut families = Vec::new();
    for suite in [
        Suite::PowerCyclic,
        Suite::PqPqr,
        Suite::PqPower,
        Suite::Dihedral,
        Suite::Quaternion,
        Suite::ElementaryAbelian,
    ] {
        families.extend(suite.instances(DEFAULT_SEED)?);
    }
    let mut bound_ok = 0;
    let mut bound_total = 0;
    // equality counts per grid alpha: (held, cases)
    let mut equality = [(0usize, 0usize); ALPHA_GRID.len()];
    for f in &families {
        let g = f.graph()?;
        let phi = match f {
            Family::PowerCyclic { n } if is_prime(*n) || matches!(Factorization::of(*n)?.pairs(), [(_, 1), (_, 1)]) => {
                Some(totient(*n)? as usize)
            }
            _ => None,
        };
        for (k, &a) in ALPHA_GRID.iter().enumerate() {
            let b = universal_multiplicity_bound(&g, &Alpha::new(a)?, TOL)?;
            bound_total += 1;
            bound_ok += usize::from(b.holds());
            if let Some(phi) = phi {
                equality[k].1 += 1;
                equality[k].0 += usize::from(b.observed == phi && b.bound == phi);
            }
        }
    }
    let per_alpha: Vec<String> = ALPHA_GRID
        .iter()
        .zip(&equality)
        .map(|(a, (held, cases))| format!("a={a}: {held}/{cases}"))
        .collect();
    let all_equal = equality.iter().all(|(held, cases)| held == cases);
    outcome(
        bound_ok == bound_total && all_equal,
        format!(
            "bound b-1 held in {bound_ok}/{bound_total}; multiplicity exactly phi(n) for n prime or pq: {}",
            per_alpha.join(", ")
        ),
    )
}

type Q = Ratio<i64>;

fn c9_matrix_identities() -> Result<Outcome> {
    let mut graphs: Vec<Graph> = Suite::JoinedUnionRandom
        .instances(DEFAULT_SEED)?
        .iter()
        .map(Family::graph)
        .collect::<Result<_>>()?;
    for n in [6u64, 12, 30] {
        graphs.push(Family::PowerCyclic { n }.graph()?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut ok = 0;
    let mut total = 0;
    for g in &graphs {
        let adj = adjacency_matrix::<Q>(g);
        let deg = degree_matrix::<Q>(g);
        let a_of = |x: Q| a_alpha_matrix(g, &Alpha::new(x).expect("in range"));
        let checks = [
            a_of(Q::from_integer(0)) == adj,
            a_of(Q::from_integer(1)) == deg,
            a_of(Q::new(1, 2)).scale(&Q::from_integer(2)) == signless_laplacian_matrix::<Q>(g),
        ];
        total += checks.len();
        ok += checks.iter().filter(|&&c| c).count();
        for _ in 0..5 {
            let x = Q::new(rng.random_range(0..=97), 97);
            let y = Q::new(rng.random_range(0..=89), 89);
            let lhs = a_of(x).sub(&a_of(y))?;
            let rhs = laplacian_matrix::<Q>(g).scale(&(x - y));
            total += 1;
            ok += usize::from(lhs == rhs);
        }
    }
    outcome(ok == total, format!("{ok}/{total} exact rational identities over {} graphs", graphs.len()))
}

/// Every value of `sub` (with multiplicity) pairs with a distinct value of
/// `full` within the scaled tolerance.
fn contained(sub: &Spectrum<f64>, full: &Spectrum<f64>) -> bool {
    let bound = TOL * 1f64.max(full.radius());
    let mut used = vec![false; full.len()];
    sub.values().iter().all(|&x| {
        let hit = full
            .values()
            .iter()
            .enumerate()
            .filter(|(i, &y)| !used[*i] && (x - y).abs() <= bound)
            .min_by(|a, b| (x - a.1).abs().total_cmp(&(x - b.1).abs()))
            .map(|(i, _)| i);
        hit.map(|i| used[i] = true).is_some()
    })
}

fn random_symmetric(rng: &mut ChaCha8Rng, d: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in i..d {
            let v = rng.random_range(-3.0..3.0);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}

fn c10_equitable() -> Result<Outcome> {
    let families = Suite::JoinedUnionRandom.instances(DEFAULT_SEED)?;
    let mut contain_ok = 0;
    let mut contain_total = 0;
    for f in &families {
        let Family::JoinedUnion { spec, .. } = f else { unreachable!() };
        let g = f.graph()?;
        let partition = VertexPartition::natural(&spec.sizes())?;
        for &a in &ALPHA_GRID {
            let alpha = Alpha::new(a)?;
            let q = quotient_matrix(&g, &partition, &MatrixKind::AAlpha(alpha.clone()))?;
            let direct = eig_symmetric(&a_alpha_matrix(&g, &alpha))?;
            contain_total += 1;
            contain_ok += usize::from(q.equitable && contained(&eig_quotient(&q.matrix, &partition.sizes())?, &direct));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 0x5eed);
    let mut interlace_ok = 0;
    let mut interlace_total = 0;
    let mut attempts = 0;
    while interlace_total < 20 && attempts < 1000 {
        attempts += 1;
        let g = families[rng.random_range(0..families.len())].graph()?;
        let n = g.order();
        let m = rng.random_range(2..=n.min(6));
        let mut label: Vec<usize> = (0..n).map(|v| if v < m { v } else { rng.random_range(0..m) }).collect();
        for i in (1..n).rev() {
            label.swap(i, rng.random_range(0..=i));
        }
        let blocks: Vec<Vec<usize>> = (0..m).map(|b| (0..n).filter(|&v| label[v] == b).collect()).collect();
        let partition = VertexPartition::new(blocks, n)?;
        let alpha = Alpha::new(ALPHA_GRID[rng.random_range(0..ALPHA_GRID.len())])?;
        let q = quotient_matrix(&g, &partition, &MatrixKind::AAlpha(alpha.clone()))?;
        if q.equitable {
            continue;
        }
        interlace_total += 1;
        let mu = eig_quotient(&q.matrix, &partition.sizes())?;
        let lambda = eig_symmetric(&a_alpha_matrix(&g, &alpha))?;
        let slack = TOL * 1f64.max(lambda.radius());
        let (lv, mv) = (lambda.values(), mu.values());
        let holds = (0..m).all(|i| lv[i] + slack >= mv[i] && mv[i] + slack >= lv[n - m + i]);
        interlace_ok += usize::from(holds);
    }

    let mut block_ok = 0;
    for _ in 0..20 {
        let t = rng.random_range(0..=3);
        let s = rng.random_range(1..=3);
        let spec = BlockSymmetricSpec {
            x: random_symmetric(&mut rng, t),
            beta: (0..t).map(|_| (0..s).map(|_| rng.random_range(-3.0..3.0)).collect()).collect(),
            b: random_symmetric(&mut rng, s),
            c: random_symmetric(&mut rng, s),
            copies: rng.random_range(1..=5),
        };
        let full = eig_symmetric(&spec.assemble()?)?;
        let red = spec.reduce()?;
        let mut values: Vec<f64> = red
            .repeated
            .values()
            .iter()
            .flat_map(|&v| std::iter::repeat_n(v, red.multiplicity))
            .collect();
        values.extend_from_slice(eig_symmetric(&red.reduced)?.values());
        block_ok += usize::from(spectra_match(&Spectrum::from_values(values), &full, TOL).matched);
    }
    outcome(
        contain_ok == contain_total && interlace_ok == interlace_total && interlace_total == 20 && block_ok == 20,
        format!(
            "quotient containment {contain_ok}/{contain_total}; interlacing {interlace_ok}/{interlace_total} non-equitable partitions; \
             block reduction {block_ok}/20"
        ),
    )
}

fn c11_named() -> Result<Outcome> {
    let (s, _) = sweep(Suite::Named)?;
    let mut split_dev = 0f64;
    let mut split_agree = 0;
    let mut split_total = 0;
    for n in 2..=10 {
        for omega in 1..n {
            for &a in &ALPHA_GRID {
                let f = verify::check_named_pair(NamedFamily::CompleteSplit { omega, n }, a)?;
                split_total += 1;
                split_agree += usize::from(f.agrees);
                split_dev = split_dev.max(f.deviation);
            }
        }
    }
    let example = verify::check_named_pair(NamedFamily::CompleteSplit { omega: 3, n: 8 }, 0.5)?;
    outcome(
        s.all_matched(),
        format!(
            "{} named-family cases matched; printed complete-split pair deviation: agrees in {split_agree}/{split_total}, \
             max deviation {split_dev:.3e}, e.g. {}",
            ratio(&s),
            example.detail
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Result<Outcome>); 11] = [
        ("joined-union theorem", c1_joined_union),
        ("P(Z_n) generic", c2_power_cyclic),
        ("pq and pqr matrices", c3_pq_pqr),
        ("pq^N instances", c4_pq_power),
        ("dihedral", c5_dihedral),
        ("generalized quaternion", c6_quaternion),
        ("elementary abelian", c7_elementary_abelian),
        ("multiplicity bound", c8_multiplicity_bound),
        ("matrix identities", c9_matrix_identities),
        ("equitable machinery", c10_equitable),
        ("named families", c11_named),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run().unwrap_or_else(|e| Outcome {
            pass: false,
            detail: format!("error: {e}"),
        });
        failed += usize::from(!o.pass);
        println!(
            "criterion {:>2} [{}] {name}: {} ({:.2?})",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
