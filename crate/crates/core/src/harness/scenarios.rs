use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use super::config::ScenarioConfig;
use super::report::{CertificateRecord, ConstructionRecord, Report, TOOLKIT_VERSION};
use super::schema::Scenario;
use super::seed::sub_seed;
use crate::certify::{
    all_subsets, annihilator_decay_check, certify_subsets, coefficient_samples, content_digest, decay_profile,
    free_set_extract, greedy_separated_subset, hyperplane_cover, l1_lower_bound_certificate, named_mapping,
    pigeonhole_majority, support_annihilator_witness, support_map, weak_norm_convergence_probe, CoverOutcome,
    DensityCertificate, DensityVerdict, HyperplaneFunctional,
};
use crate::constructors::{
    enumerate_target_balls, fd_overcomplete, geometric_variant_sequence, incomplete_space_sequence, klee_vectors,
    prescribed_mass_family, separated_overcomplete_fd, sliding_hump_extract, BiorthSystem, GeometricRule,
    GeometricSchedule, IncompleteModel,
};
use crate::error::{Error, Result};
use crate::linalg::{
    cofactor_normal, det_exact, nullspace_exact, vandermonde_det, ExactMatrix, ExactVector, NormTag, Rational,
    Scalar,
};

fn to_value<T: Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

/// Collects records while a scenario runs.
struct Builder {
    seed: u64,
    constructions: Vec<ConstructionRecord>,
    certificates: Vec<CertificateRecord>,
}

impl Builder {
    fn certify(&mut self, kind: &str, verdict: &str, witness: Value, inputs: &impl Serialize) -> &mut CertificateRecord {
        let id = format!("{kind}-{}", self.certificates.iter().filter(|c| c.kind == kind).count());
        self.certificates.push(CertificateRecord {
            id,
            kind: kind.into(),
            verdict: verdict.into(),
            witness,
            pivot_log: Value::Null,
            inputs_digest: content_digest(inputs),
            subset: None,
            details: Value::Null,
        });
        self.certificates.last_mut().expect("just pushed")
    }

    fn construct(&mut self, kind: &str, params: Value, vectors: Value, refs: Vec<String>) -> &mut ConstructionRecord {
        let id = format!("{kind}-{}", self.constructions.iter().filter(|c| c.kind == kind).count());
        self.constructions.push(ConstructionRecord {
            id,
            kind: kind.into(),
            params,
            vectors,
            certificate_refs: refs,
            seed: self.seed,
            metadata: Value::Null,
        });
        self.constructions.last_mut().expect("just pushed")
    }

    fn ids_from(&self, start: usize) -> Vec<String> {
        self.certificates[start..].iter().map(|c| c.id.clone()).collect()
    }

    /// Records density certificates, re-verifying each before it is emitted.
    fn density(&mut self, vectors: &[ExactVector], certs: &[DensityCertificate]) -> Result<()> {
        for cert in certs {
            cert.verify(vectors)?;
            let inputs: Vec<&ExactVector> = cert.subset.iter().map(|&i| &vectors[i]).collect();
            let (witness, pivot_log, details) = match &cert.verdict {
                DensityVerdict::Full { rank, pivot_log } => (Value::Null, to_value(pivot_log), json!({ "rank": rank })),
                DensityVerdict::Proper {
                    witness,
                    max_abs_pairing,
                } => (
                    to_value(witness.coeffs()),
                    Value::Null,
                    json!({ "max_abs_pairing": max_abs_pairing }),
                ),
            };
            let rec = self.certify("density", cert.verdict_name(), witness, &inputs);
            rec.pivot_log = pivot_log;
            rec.subset = Some(cert.subset.clone());
            rec.details = details;
        }
        Ok(())
    }
}

/// Run one scenario end to end. Every certificate in the report has been
/// checked; any failing check aborts the run with the step named.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<Report> {
    let start = Instant::now();
    let mut b = Builder {
        seed: cfg.seed,
        constructions: Vec::new(),
        certificates: Vec::new(),
    };
    match cfg.scenario {
        Scenario::Klee => klee(cfg, &mut b)?,
        Scenario::FdDense => fd_dense(cfg, &mut b)?,
        Scenario::Separated => separated(cfg, &mut b)?,
        Scenario::Incomplete => incomplete(cfg, &mut b)?,
        Scenario::GeometricVariant => geometric_variant(cfg, &mut b)?,
        Scenario::SlidingHump => sliding_hump(cfg, &mut b)?,
        Scenario::FreeSet => free_set(cfg, &mut b)?,
        Scenario::Cover => cover(cfg, &mut b)?,
        Scenario::Probe => probe(cfg, &mut b)?,
    }
    log::info!("scenario {} finished with {} certificates", cfg.scenario, b.certificates.len());
    Ok(Report {
        scenario: cfg.scenario.as_str().into(),
        params: cfg.resolved(),
        seed: cfg.seed,
        toolkit_version: TOOLKIT_VERSION.into(),
        constructions: b.constructions,
        certificates: b.certificates,
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
    })
}

fn klee(cfg: &ScenarioConfig, b: &mut Builder) -> Result<()> {
    let lambdas = cfg.rationals("lambdas")?;
    let d = cfg.int("d")?;
    let family = klee_vectors(&lambdas, d)?;
    let subsets = all_subsets(family.len(), d);
    let certs = certify_subsets(family.vectors(), &subsets, d)?;
    let first = b.certificates.len();
    b.density(family.vectors(), &certs)?;
    for (cert, rec) in certs.iter().zip(&mut b.certificates[first..]) {
        if !cert.is_full() {
            return Err(Error::cert(
                "every d-subset is dense",
                format!("subset {:?} is not dense", cert.subset),
            ));
        }
        let nodes: Vec<Rational> = cert.subset.iter().map(|&i| lambdas[i].clone()).collect();
        let product = vandermonde_det(&nodes)?;
        let rows = ExactMatrix::from_vectors(cert.subset.iter().map(|&i| &family.vectors()[i]));
        let elimination = det_exact(&rows)?;
        if product != elimination {
            return Err(Error::cert(
                "Vandermonde product equals elimination determinant",
                format!("subset {:?}: {product} vs {elimination}", cert.subset),
            ));
        }
        rec.details["vandermonde_det"] = to_value(&product);
    }
    let refs = b.ids_from(first);
    b.construct(
        "klee-vectors",
        json!({ "lambdas": lambdas, "d": d }),
        to_value(family.vectors()),
        refs,
    );
    Ok(())
}

fn fd_dense(cfg: &ScenarioConfig, b: &mut Builder) -> Result<()> {
    let d = cfg.int("d")?;
    let n = cfg.int("n")?;
    let tag = cfg.norm("norm")?;
    let balls = enumerate_target_balls(d, n, tag)?;
    let fd = fd_overcomplete(d, n, Some(&balls), sub_seed(cfg.seed, "fd-dense"))?;
    let first = b.certificates.len();
    let certs = certify_subsets(&fd.vectors, &all_subsets(n, d), d)?;
    if let Some(c) = certs.iter().find(|c| !c.is_full()) {
        return Err(Error::cert("every d-subset is dense", format!("subset {:?}", c.subset)));
    }
    b.density(&fd.vectors, &certs)?;
    for (j, (x, ball)) in fd.vectors.iter().zip(&balls).enumerate() {
        if !ball.contains(x) {
            return Err(Error::cert("x_j inside its target ball", format!("j = {j}")));
        }
        let rec = b.certify("ball-membership", "inside", to_value(x), &(x, ball));
        rec.subset = Some(vec![j]);
        rec.details = json!({ "center": ball.center, "radius": ball.radius, "norm": tag });
    }
    let refs = b.ids_from(first);
    b.construct("fd-overcomplete", json!({ "d": d, "n": n, "norm": tag }), to_value(&fd.vectors), refs)
        .metadata = json!({ "attempts": fd.attempts, "hyperplanes_avoided": fd.hyperplanes_avoided });
    Ok(())
}

fn separated(cfg: &ScenarioConfig, b: &mut Builder) -> Result<()> {
    let d = cfg.int("d")?;
    let eps = cfg.rational("eps")?;
    let tag = cfg.norm("norm")?;
    let fam = separated_overcomplete_fd(d, &eps, tag, sub_seed(cfg.seed, "separated"))?;
    let first = b.certificates.len();
    let vectors = fam.vectors();
    for (k, step) in fam.steps.iter().enumerate() {
        step.verify(&vectors[..k], &eps)?;
        let rec = b.certify("riesz", "verified", to_value(&step.witness), &(&vectors[..k], &step.x));
        rec.subset = Some((0..k).collect());
        rec.details = json!({
            "x": step.x,
            "pairing": step.pairing,
            "x_norm_squared": step.x_norm_squared,
            "witness_dual_norm_squared": step.witness_dual_norm_squared,
            "certified_distance": step.certified_distance(),
        });
    }
    let certs = certify_subsets(&vectors, &all_subsets(d, d), d)?;
    b.density(&vectors, &certs)?;
    let delta = Scalar::Exact(Rational::one() - &eps);
    let chosen = greedy_separated_subset(&vectors, &delta, tag)?;
    if chosen.len() != vectors.len() {
        return Err(Error::cert(
            "pairwise distances ≥ 1−ε",
            format!("greedy kept {:?} of {}", chosen, vectors.len()),
        ));
    }
    let rec = b.certify("separation", "separated", to_value(&chosen), &vectors);
    rec.details = json!({ "delta": delta });
    let refs = b.ids_from(first);
    b.construct(
        "riesz-separated",
        json!({ "d": d, "eps": eps, "norm": tag }),
        to_value(&vectors),
        refs,
    );
    Ok(())
}

fn model(cfg: &ScenarioConfig, horizon: usize) -> Result<IncompleteModel> {
    let rule = GeometricRule::new(cfg.rational("scale")?, cfg.rational("ratio")?)?;
    Ok(IncompleteModel::new(rule, cfg.norm("norm")?, horizon))
}

fn incomplete(cfg: &ScenarioConfig, b: &mut Builder) -> Result<()> {
    let k = cfg.int("k")?;
    let j_max = cfg.int("j_max")? as u32;
    let k_max = cfg.int("k_max")?;
    let check_k = cfg.int("check_k")?;
    let tol = cfg.float("tol")?;
    let subsequence = cfg.ints("subsequence")?;
    let model = model(cfg, k)?;
    let seq = incomplete_space_sequence(&model, k)?;
    let first = b.certificates.len();
    for bound in &seq.bounds {
        if !bound.holds {
            return Err(Error::cert(
                "‖y − g_k‖ ≤ ‖y_k − y‖ + (k+1)/2^k",
                format!("k = {}", bound.k),
            ));
        }
        let rec = b.certify("convergence-bound", "holds", Value::Null, &seq.vectors[bound.k]);
        rec.subset = Some(vec![bound.k]);
        rec.details = to_value(bound);
    }

    if let Some(&bad) = subsequence.iter().find(|&&i| i > k) {
        return Err(Error::Config(format!("subsequence index {bad} exceeds k = {k}")));
    }
    let mut rows: Vec<Vec<Rational>> = subsequence.iter().map(|&i| seq.vectors[i].coords().to_vec()).collect();
    rows.push(model.target_truncation(seq.dim).into_coords());
    let functional = nullspace_exact(&ExactMatrix::from_rows(rows))
        .into_iter()
        .next()
        .map(|v| v.with_tag(model.norm_tag().dual()))
        .ok_or_else(|| Error::Construction("no functional annihilates the subsequence and y".into()))?;
    let report = annihilator_decay_check(&model, &seq.vectors, &subsequence, &[functional.clone()], j_max, tol)?;
    for row in &report.functionals[0].rows {
        if row.within_bound == Some(false) {
            return Err(Error::cert(
                "|⟨e*, x_j⟩| ≤ min B(j, k_i)",
                format!("j = {}: pairing {}", row.j, row.pairing),
            ));
        }
    }
    let rec = b.certify("annihilator-decay", "consistent", to_value(&functional), &(&seq.vectors, &subsequence));
    rec.subset = Some(subsequence.clone());
    rec.details = to_value(&report);

    for j in 0..=j_max {
        let profile = decay_profile(j, k_max);
        let at_check = profile.bounds.get(check_k).cloned();
        let rec = b.certify("decay-profile", "decreasing-from-onset", Value::Null, &(j, k_max));
        rec.details = json!({
            "j": j,
            "onset": profile.onset,
            "k_max": k_max,
            "check_k": check_k,
            "bound_at_check_k": at_check.as_ref().map(|s| s.to_float()),
            "below_tol": at_check.as_ref().map(|s| s.to_float() < tol),
        });
    }

    let refs = b.ids_from(first);
    b.construct(
        "incomplete-sequence",
        json!({ "k": k, "norm": model.norm_tag(), "cutoffs": model.cutoffs() }),
        to_value(&seq.vectors),
        refs,
    );
    Ok(())
}

fn geometric_variant(cfg: &ScenarioConfig, b: &mut Builder) -> Result<()> {
    let k = cfg.int("k")?;
    let j_max = cfg.int("j_max")? as u32;
    let threshold = cfg.rational("threshold")?;
    let model = model(cfg, k)?;
    let schedule = match cfg.choice("schedule") {
        "dyadic" => GeometricSchedule::dyadic(k + 1, j_max, threshold)?,
        _ => GeometricSchedule::harmonic(k + 1, j_max, threshold)?,
    };
    let var = geometric_variant_sequence(&model, &schedule, k)?;
    let first = b.certificates.len();
    for check in &var.rate_checks {
        let rec = b.certify("rate-condition", "holds", Value::Null, &(schedule.lambdas(), check.j));
        rec.details = to_value(check);
    }
    let refs = b.ids_from(first);
    b.construct(
        "geometric-variant",
        json!({ "k": k, "lambdas": schedule.lambdas(), "norm": model.norm_tag() }),
        to_value(&var.vectors),
        refs,
    )
    .metadata = json!({ "distances": var.distances });
    Ok(())
}

fn sliding_hump(cfg: &ScenarioConfig, b: &mut Builder) -> Result<()> {
    let len = cfg.int("len")?;
    let head_mass = cfg.rational("head_mass")?;
    let eps = cfg.rational("eps")?;
    let family = prescribed_mass_family(
        len,
        &head_mass,
        cfg.int("head_width")?,
        cfg.int("tail_width")?,
        cfg.int("decoys")?,
    )?;
    let data = sliding_hump_extract(&family, &eps)?;
    let samples = coefficient_samples(data.extracted.len(), cfg.int("samples")?, sub_seed(cfg.seed, "sliding-hump"));
    let cert = l1_lower_bound_certificate(&data, &samples)?;
    let first = b.certificates.len();
    let rec = b.certify("sliding-hump-properties", "holds", to_value(&data.extracted), &family);
    rec.details = to_value(&data.properties);
    let decomposition: Vec<Value> = cert
        .decomposition
        .iter()
        .map(|d| json!({ "source": d.source, "cut": d.cut, "middle_mass": d.middle_mass, "tail_mass": d.tail_mass }))
        .collect();
    let rec = b.certify("l1-lower-bound", "holds", to_value(&cert.constant), &(&family, &samples));
    rec.details = json!({
        "n": cert.n_value,
        "epsilon": cert.epsilon,
        "constant": cert.constant,
        "half_gap": cert.half_gap,
        "chain": cert.chain,
        "decomposition": decomposition,
        "sample_count": cert.sample_count,
        "sampled_min": cert.sampled_min,
    });
    let refs = b.ids_from(first);
    b.construct(
        "sliding-hump",
        json!({ "len": len, "head_mass": head_mass, "eps": eps }),
        to_value(&family),
        refs,
    )
    .metadata = json!({
        "n_alpha_table": data.n_table,
        "alpha0": data.alpha0,
        "plateau_end": data.plateau_end,
        "alpha0_rule": data.alpha0_rule,
    });
    Ok(())
}

fn random_mapping(n: usize, max_size: usize, seed: u64) -> Vec<BTreeSet<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let size = rng.gen_range(0..=max_size.min(n));
            (0..size).map(|_| rng.gen_range(0..n)).collect()
        })
        .collect()
}

/// `y_α = Σ_{β ∈ f(α) ∪ {α}} e_β`, so `supp(y_α) = f(α) ∪ {α}`.
pub fn biorth_demonstration(f: &[BTreeSet<usize>]) -> Vec<ExactVector> {
    let n = f.len();
    (0..n)
        .map(|a| {
            let mut y = ExactVector::unit(n, a, NormTag::L1);
            for &b in &f[a] {
                y.set(b, Rational::one());
            }
            y
        })
        .collect()
}

fn free_set(cfg: &ScenarioConfig, b: &mut Builder) -> Result<()> {
    let n = cfg.int("n")?;
    if n == 0 {
        return Err(Error::Config("n must be positive".into()));
    }
    let f = match cfg.choice("f") {
        "random" => random_mapping(n, cfg.int("max_size")?, sub_seed(cfg.seed, "free-set")),
        name => named_mapping(name, n)?,
    };
    let family = biorth_demonstration(&f);
    let system = BiorthSystem::new(n);
    let g = support_map(&system, &family);
    let inst = free_set_extract(n, &g)?;
    if !inst.is_free() {
        return Err(Error::cert("free-set invariant", format!("H = {:?}", inst.h)));
    }
    let first = b.certificates.len();
    let rec = b.certify("free-set", "free", to_value(&inst.h), &g);
    rec.subset = Some(inst.h.clone());
    rec.details = json!({ "size": inst.h.len() });
    for &gamma in &inst.h {
        let record = support_annihilator_witness(&system, &family, &inst.h, gamma)?;
        let verdict = if record.vacuous { "vacuous" } else { "annihilates" };
        let rec = b.certify("support-annihilator", verdict, to_value(&system.functional(gamma)), &(&family, gamma));
        rec.subset = Some(inst.h.clone());
        rec.details = to_value(&record);
    }
    let refs = b.ids_from(first);
    b.construct("biorth-demonstration", json!({ "n": n, "f": f }), to_value(&family), refs);
    Ok(())
}

fn coordinate_cover_instance() -> (Vec<ExactVector>, Vec<HyperplaneFunctional>) {
    let points = [[0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 1], [1, 1, 0], [0, 2, 1]]
        .iter()
        .map(|p| ExactVector::from_ints(p, NormTag::L1))
        .collect();
    let hyperplanes = (0..3).map(|i| HyperplaneFunctional::coordinate(3, i)).collect();
    (points, hyperplanes)
}

fn klee_escape_instance() -> Result<(Vec<ExactVector>, Vec<HyperplaneFunctional>)> {
    let lambdas: Vec<Rational> = (1..=5).map(|i| crate::linalg::q(i, 12)).collect();
    let fam = klee_vectors(&lambdas, 3)?;
    let h = HyperplaneFunctional::new(cofactor_normal(&fam.vectors()[..2], 3))?;
    Ok((fam.vectors().to_vec(), vec![h]))
}

fn cover(cfg: &ScenarioConfig, b: &mut Builder) -> Result<()> {
    let which = cfg.choice("instance");
    let mut instances = Vec::new();
    if which != "klee" {
        instances.push(("coordinate", coordinate_cover_instance()));
    }
    if which != "coordinate" {
        instances.push(("klee", klee_escape_instance()?));
    }
    for (name, (points, hyperplanes)) in instances {
        let first = b.certificates.len();
        let outcome = hyperplane_cover(&points, &hyperplanes)?;
        match &outcome {
            CoverOutcome::Covered { assignment } => {
                for (i, &h) in assignment.iter().enumerate() {
                    if !hyperplanes[h].contains(&points[i]) {
                        return Err(Error::cert("cover assignment", format!("point {i} not in hyperplane {h}")));
                    }
                }
                b.certify("cover", "Covered", to_value(assignment), &(&points, &hyperplanes));
                let m = pigeonhole_majority(&points, &hyperplanes)?;
                if m.members.len() < m.required {
                    return Err(Error::cert(
                        "pigeonhole count",
                        format!("{} < {}", m.members.len(), m.required),
                    ));
                }
                let rec = b.certify("pigeonhole", "majority", to_value(&m.hyperplane), &(&points, &hyperplanes));
                rec.subset = Some(m.members.clone());
                rec.details = to_value(&m);
            }
            CoverOutcome::Escape { point, pairings } => {
                if pairings.iter().any(Rational::is_zero) {
                    return Err(Error::cert("escape pairings nonzero", format!("point {point}")));
                }
                let rec = b.certify("cover", "Escape", to_value(&points[*point]), &(&points, &hyperplanes));
                rec.subset = Some(vec![*point]);
                rec.details = json!({ "pairings": pairings });
            }
        }
        let refs = b.ids_from(first);
        b.construct(
            "cover-instance",
            json!({ "instance": name, "hyperplanes": hyperplanes }),
            to_value(&points),
            refs,
        );
    }
    Ok(())
}

fn probe(cfg: &ScenarioConfig, b: &mut Builder) -> Result<()> {
    let k = cfg.int("k")?;
    let window = cfg.int("window")?;
    let tol = cfg.float("tol")?;
    let (sequence, limit) = match cfg.choice("sequence") {
        "basis" => {
            let dim = (k + 1).max(window);
            let seq: Vec<ExactVector> = (0..=k).map(|n| ExactVector::unit(dim, n, NormTag::L2)).collect();
            (seq, ExactVector::zeros(dim, NormTag::L2))
        }
        _ => {
            let model = IncompleteModel::new(GeometricRule::dyadic(), NormTag::L1, k);
            let seq = incomplete_space_sequence(&model, k)?;
            let dim = seq.dim.max(window);
            let vectors = seq.vectors.iter().map(|v| v.resized(dim)).collect();
            (vectors, model.target_truncation(dim))
        }
    };
    let report = weak_norm_convergence_probe(&sequence, &limit, window, tol)?;
    let first = b.certificates.len();
    let verdict = to_value(&report.class);
    let rec = b.certify("probe", verdict.as_str().unwrap_or("unknown"), Value::Null, &(&sequence, &limit));
    rec.details = to_value(&report);
    let refs = b.ids_from(first);
    b.construct(
        "probe-sequence",
        json!({ "sequence": cfg.choice("sequence"), "k": k }),
        to_value(&sequence),
        refs,
    );
    Ok(())
}
