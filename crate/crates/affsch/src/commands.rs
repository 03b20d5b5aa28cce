use affine_schubert::demazure::{independence_check, spanning_check, EXTRA_POINTS};
use affine_schubert::exact::{ExactMatrix, RandomSource};
use affine_schubert::nilpotent::filtration::{conjecture_check, filtration_dimensions, Convention, DEFAULT_MAX_M, DEFAULT_MAX_N};
use affine_schubert::nilpotent::{
    cutout_check, jordan_matrix, lusztig_embed, orbit_equation_spaces, orbit_membership, random_orbit_point,
    NilpotentPoint,
};
use affine_schubert::nilpotent::lusztig::orbit_schubert_tuple;
use affine_schubert::partition::Partition;
use affine_schubert::schubert::build_cell_matrix;
use affine_schubert::straighten::{
    default_certificate_size, degree_one_ideal_generators, shuffle, straighten, Straightener, POINT_BOUND,
};
use affine_schubert::symfun::quotient::multinomial;
use affine_schubert::symfun::{b_mu_graded_character, cocharge_kostka, graded_multiplicity, kostka_foulkes, level_one_check};
use affine_schubert::symfun::kostka::kostka_number;
use affine_schubert::verify::verify_all;
use affine_schubert::weyl::{count_formulas, enumerate_admissible, Ambient, ChainElement, IndexTuple};
use affine_schubert::{Error, Result};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::args::{AmbientArgs, ChainArgs, Command, KostkaIndexing, MuArgs, RectangleConvention, TupleArgs};
use crate::report::Report;

/// Settings shared by every command.
pub struct RunConfig {
    pub seed: u64,
    pub max_enum: u128,
}

impl RunConfig {
    fn rng(&self) -> RandomSource {
        RandomSource::new(self.seed)
    }
}

pub fn run(command: &Command, cfg: &RunConfig) -> Result<Report> {
    match command {
        Command::Admissible(a) => admissible(a),
        Command::Chain(a) => chain(a, cfg),
        Command::Shuffle { args, level, samples } => shuffle_cmd(args, *level, *samples, cfg),
        Command::Straighten(a) => straighten_cmd(a, cfg),
        Command::IdealGens { args, samples } => ideal_gens(args, *samples, cfg),
        Command::BasisCheck(a) => basis_check(a, cfg),
        Command::Counts(a) => counts(a, cfg),
        Command::OrbitMember { args, lambda } => orbit_member(args, lambda, cfg),
        Command::Lusztig(a) => lusztig(a, cfg),
        Command::Filtration { args, m, samples } => filtration(args, *m, *samples, cfg),
        Command::Conjecture { args, m, convention } => conjecture(args, *m, *convention, cfg),
        Command::OrbitEquations(a) => orbit_equations(a),
        Command::Cutout { args, samples } => cutout(args, *samples, cfg),
        Command::Kostka { lambda, mu, indexing } => kostka(lambda, mu, *indexing),
        Command::BmuCharacter { args, max_degree } => bmu_character(args, *max_degree),
        Command::LevelOne { args, max_degree } => level_one(args, *max_degree, cfg),
        Command::VerifyAll { n, s } => verify(*n, *s, cfg),
    }
}

fn ambient(a: &AmbientArgs) -> Result<Ambient> {
    Ambient::new(a.n, a.s)
}

fn chain_element(a: &ChainArgs) -> Result<ChainElement> {
    ChainElement::at(ambient(&a.ambient)?, a.tau)
}

fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}

fn partition(a: &MuArgs) -> Result<Partition> {
    let mu = parse_partition(&a.mu)?;
    match a.n {
        Some(n) if n != mu.size() => Err(Error::SizeMismatch(mu.size(), n)),
        _ => Ok(mu),
    }
}

fn tuple(a: &TupleArgs) -> Result<(Ambient, IndexTuple)> {
    let amb = ambient(&a.ambient)?;
    let entries = a
        .tuple
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad tuple entry {t:?}"))))
        .collect::<Result<Vec<usize>>>()?;
    if entries.len() != amb.r() || entries.iter().any(|&e| e == 0 || e > amb.rows()) {
        return Err(Error::InvalidArgument(format!(
            "tuple must have {} entries in 1..={}",
            amb.r(),
            amb.rows()
        )));
    }
    Ok((amb, IndexTuple::new(amb.n, entries)?))
}

fn chain_fields(report: &mut Report, phi: &ChainElement) {
    report
        .field("n", phi.amb.n)
        .field("s", phi.amb.s)
        .field("tau", phi.position)
        .field("group", phi.group)
        .field("slot", phi.slot)
        .field("phi", &phi.tuple)
        .field("dimension", phi.dimension());
}

fn matrix_strings(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

fn admissible(a: &ChainArgs) -> Result<Report> {
    let phi = chain_element(a)?;
    let tuples = enumerate_admissible(&phi);
    let predicted = phi.predicted_count();
    let mut r = Report::new("admissible");
    chain_fields(&mut r, &phi);
    r.field("count", tuples.len())
        .field("predicted", predicted)
        .field("tuples", &tuples)
        .check("count-formula", tuples.len() as u128 == predicted);
    Ok(r)
}

fn chain(a: &AmbientArgs, cfg: &RunConfig) -> Result<Report> {
    let amb = ambient(a)?;
    let rows = count_formulas(amb, cfg.max_enum)?;
    let elements: Vec<Value> = rows
        .iter()
        .map(|row| {
            let phi = ChainElement::at(amb, row.position).expect("position in range");
            json!({
                "position": row.position,
                "group": row.group,
                "slot": row.slot,
                "tuple": row.tuple,
                "dimension": phi.dimension(),
                "admissible": row.enumerated,
            })
        })
        .collect();
    let dims_ok = rows.iter().all(|row| {
        let phi = ChainElement::at(amb, row.position).expect("position in range");
        phi.dimension() == amb.top_dimension() + 1 - row.position
    });
    let mut r = Report::new("chain");
    r.field("n", amb.n)
        .field("s", amb.s)
        .field("length", amb.chain_length())
        .field("top_dimension", amb.top_dimension())
        .field("elements", elements)
        .check("dimensions-decrease", dims_ok)
        .check("counts", rows.iter().all(|row| row.enumerated == row.predicted));
    Ok(r)
}

fn counts(a: &AmbientArgs, cfg: &RunConfig) -> Result<Report> {
    let amb = ambient(a)?;
    let rows = count_formulas(amb, cfg.max_enum)?;
    let mismatches: Vec<usize> = rows.iter().filter(|r| r.enumerated != r.predicted).map(|r| r.position).collect();
    let mut r = Report::new("counts");
    r.field("n", amb.n)
        .field("s", amb.s)
        .field("label_count", amb.label_count())
        .field("rows", &rows)
        .check_with("closed-forms", mismatches.is_empty(), json!({ "mismatches": mismatches }));
    Ok(r)
}

fn shuffle_cmd(a: &TupleArgs, level: usize, samples: usize, cfg: &RunConfig) -> Result<Report> {
    let (amb, base) = tuple(a)?;
    let rel = shuffle(&base, level, amb)?;
    let cell = build_cell_matrix(&ChainElement::at(amb, 1)?);
    let points = cell.random_points(&cfg.rng(), samples, POINT_BOUND);
    let nonzero = points.iter().filter(|p| !rel.evaluate(p).is_zero()).count();
    let mut r = Report::new("shuffle");
    r.field("n", amb.n)
        .field("s", amb.s)
        .flatten(&rel)
        .field("samples", samples)
        .field("nonzero", nonzero)
        .check("vanishes-on-top-cell", nonzero == 0);
    Ok(r)
}

fn straighten_cmd(a: &TupleArgs, cfg: &RunConfig) -> Result<Report> {
    let (amb, t) = tuple(a)?;
    let mut st = Straightener::new(amb);
    let res = straighten(&mut st, &t, &cfg.rng(), default_certificate_size(amb))?;
    let all_admissible = res.expansion.tuples().all(IndexTuple::is_admissible);
    let mut r = Report::new("straighten");
    r.field("n", amb.n)
        .field("s", amb.s)
        .field("input", &res.input)
        .field("admissible_input", res.input.is_admissible())
        .field("expansion", &res.expansion)
        .field("certificate_points", res.certificate.len())
        .check("agrees-at-certificate-points", res.verified)
        .check("expansion-admissible", all_admissible);
    Ok(r)
}

fn ideal_gens(a: &ChainArgs, samples: usize, cfg: &RunConfig) -> Result<Report> {
    let phi = chain_element(a)?;
    let mut st = Straightener::new(phi.amb);
    let (gens, basis) = degree_one_ideal_generators(&mut st, &phi)?;
    let cell = build_cell_matrix(&phi);
    let points = cell.random_points(&cfg.rng(), samples, POINT_BOUND);
    let failing: Vec<&IndexTuple> =
        gens.iter().filter(|g| points.iter().any(|p| !g.form.evaluate(p).is_zero())).map(|g| &g.label).collect();
    let mut r = Report::new("ideal-gens");
    chain_fields(&mut r, &phi);
    r.field("basis", &basis)
        .field("generator_count", gens.len())
        .field("generators", &gens)
        .field("samples", samples)
        .check("basis-count", basis.len() as u128 == phi.predicted_count())
        .check_with("generators-vanish", failing.is_empty(), json!({ "failing": failing }));
    Ok(r)
}

fn basis_check(a: &ChainArgs, cfg: &RunConfig) -> Result<Report> {
    let phi = chain_element(a)?;
    let rng = cfg.rng();
    let cert = independence_check(&phi, &rng.fork(0));
    let span = spanning_check(&phi, &rng.fork(1), EXTRA_POINTS);
    let mut r = Report::new("basis-check");
    chain_fields(&mut r, &phi);
    r.field("admissible", cert.expected())
        .field("rank", cert.rank)
        .field("independence", &cert)
        .field("spanning", &span)
        .check("independent", cert.is_valid())
        .check("spanning", span.pass);
    Ok(r)
}

fn orbit_member(a: &MuArgs, lambda: &str, cfg: &RunConfig) -> Result<Report> {
    let mu = partition(a)?;
    let lambda = parse_partition(lambda)?;
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let point = random_orbit_point(&lambda, &mut cfg.rng())?;
    let (closure, open) = orbit_membership(&point, &mu)?;
    let (jordan_closure, _) = orbit_membership(&NilpotentPoint::new(jordan_matrix(&lambda))?, &mu)?;
    let dominance = lambda.dominance_leq(&mu)?;
    let mut r = Report::new("orbit-member");
    r.field("mu", &mu)
        .field("lambda", &lambda)
        .field("point", matrix_strings(point.matrix()))
        .field("power_ranks", point.power_ranks())
        .field("jordan_type", point.jordan_type())
        .field("in_closure", closure)
        .field("in_open_orbit", open)
        .field("dominance", dominance)
        .check("sampled-type", point.jordan_type() == lambda)
        .check("closure-matches-dominance", closure == dominance && jordan_closure == dominance)
        .check("open-iff-equal", open == (lambda == mu));
    Ok(r)
}

fn lusztig(a: &MuArgs, cfg: &RunConfig) -> Result<Report> {
    let mu = partition(a)?;
    let point = random_orbit_point(&mu, &mut cfg.rng())?;
    let emb = lusztig_embed(&point);
    let schubert = orbit_schubert_tuple(&mu)?;
    let nonvanishing = emb.nonvanishing_tuples();
    let bounded = nonvanishing.iter().all(|t| t.dominates(&schubert));
    let mut r = Report::new("lusztig");
    r.field("mu", &mu)
        .field("n", mu.size())
        .field("nilpotent", matrix_strings(point.matrix()))
        .field("matrix", matrix_strings(emb.matrix()))
        .field("schubert_tuple", &schubert)
        .field("nonvanishing", &nonvanishing)
        .check("bottom-minor-is-one", emb.bottom_minor().is_one())
        .check("shift-stable", emb.is_shift_stable())
        .check("nonvanishing-dominate-schubert-tuple", bounded)
        .check("schubert-tuple-nonvanishing", nonvanishing.contains(&schubert));
    Ok(r)
}

fn filtration(a: &MuArgs, m: usize, samples: Option<usize>, cfg: &RunConfig) -> Result<Report> {
    let mu = partition(a)?;
    let data = filtration_dimensions(&mu, m, &cfg.rng(), samples, (DEFAULT_MAX_N, DEFAULT_MAX_M))?;
    let nested = data.dims.windows(2).all(|w| w[0] <= w[1]);
    let graded = data.dims.iter().zip(&data.degree_dims).all(|(d, g)| *d == g.values().sum::<usize>());
    let mut r = Report::new("filtration");
    r.flatten(&data).check("nested", nested).check("degree-profile-sums", graded);
    Ok(r)
}

fn conjecture(a: &MuArgs, m: usize, convention: RectangleConvention, cfg: &RunConfig) -> Result<Report> {
    let mu = partition(a)?;
    let conv = match convention {
        RectangleConvention::Rows => Convention::Rows,
        RectangleConvention::Cols => Convention::Cols,
    };
    let rep = conjecture_check(&mu, m, &cfg.rng(), conv)?;
    let mut r = Report::new("conjecture");
    r.flatten(&rep).check("match", rep.matches);
    Ok(r)
}

fn orbit_equations(a: &MuArgs) -> Result<Report> {
    let mu = partition(a)?;
    let gens = orbit_equation_spaces(&mu)?;
    let j = jordan_matrix(&mu);
    let nonzero: Vec<&str> = gens.iter().filter(|g| !g.evaluate(&j).is_zero()).map(|g| g.label.as_str()).collect();
    let mut r = Report::new("orbit-equations");
    r.field("mu", &mu)
        .field("n", mu.size())
        .field("generator_count", gens.len())
        .field("generators", &gens)
        .check_with("vanish-at-jordan-point", nonzero.is_empty(), json!({ "nonzero": nonzero }));
    Ok(r)
}

fn cutout(a: &MuArgs, samples: usize, cfg: &RunConfig) -> Result<Report> {
    let mu = partition(a)?;
    let rep = cutout_check(&mu, &cfg.rng(), samples)?;
    let mut r = Report::new("cutout");
    r.flatten(&rep).check("set-theoretic-cutout", rep.pass);
    Ok(r)
}

fn kostka(lambda: &str, mu: &str, indexing: KostkaIndexing) -> Result<Report> {
    let lambda = parse_partition(lambda)?;
    let mu = parse_partition(mu)?;
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let k = kostka_foulkes(&lambda, &mu);
    let cocharge = cocharge_kostka(&lambda, &mu);
    let count = kostka_number(&lambda, &mu);
    // the quotient whose graded multiplicity of λ should be the cocharge polynomial
    let (quotient_mu, name) = match indexing {
        KostkaIndexing::Conjugate => (mu.conjugate(), "conjugate"),
        KostkaIndexing::Direct => (mu.clone(), "direct"),
    };
    let chars = b_mu_graded_character(&quotient_mu, affine_schubert::symfun::quotient::DEFAULT_MAX_DEGREE)?;
    let graded = graded_multiplicity(&chars, &lambda)?;
    let mut r = Report::new("kostka");
    r.field("lambda", &lambda)
        .field("mu", &mu)
        .field("kostka_foulkes", k.coeffs())
        .field("kostka_foulkes_text", k.to_string())
        .field("cocharge", cocharge.coeffs())
        .field("kostka_number", count)
        .field("indexing", name)
        .field("quotient_mu", &quotient_mu)
        .field("graded_multiplicity", graded.coeffs())
        .check("value-at-one-counts-tableaux", k.eval(1) == count as i64)
        .check("graded-multiplicity", graded == cocharge);
    Ok(r)
}

fn bmu_character(a: &MuArgs, max_degree: usize) -> Result<Report> {
    let mu = partition(a)?;
    let chars = b_mu_graded_character(&mu, max_degree)?;
    let expected = multinomial(&mu.conjugate());
    let mut r = Report::new("bmu-character");
    r.flatten(&chars).field("total_dimension", chars.total_dimension());
    if chars.complete {
        r.field("expected_total", expected)
            .check("total-dimension", chars.total_dimension() as u128 == expected);
    }
    Ok(r)
}

fn level_one(a: &MuArgs, max_degree: usize, cfg: &RunConfig) -> Result<Report> {
    let mu = partition(a)?;
    let rep = level_one_check(&mu, max_degree, &cfg.rng())?;
    let mut r = Report::new("level-one");
    r.flatten(&rep).check("degree-identity", rep.pass);
    Ok(r)
}

fn verify(n: Option<usize>, s: Option<usize>, cfg: &RunConfig) -> Result<Report> {
    let checks = verify_all(&cfg.rng())?;
    let mut r = Report::new("verify-all");
    r.field("seed", cfg.seed).field("n", n).field("s", s).field("grid", "fixed");
    for c in checks {
        r.check_with(&c.name, c.pass, c.detail);
    }
    Ok(r)
}
