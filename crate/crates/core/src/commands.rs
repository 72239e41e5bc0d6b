//! The command implementations behind the `amitsur` binary. Each returns a
//! [`Report`]; errors are input problems (parse, shape, size).

use std::collections::BTreeMap;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{centralizer, dual_hopf, Extension, HopfData};
use crate::amitsur::AmitsurComplex;
use crate::coring::{build_f2, endo_coring, hopf_coring, sweedler_coring, CoringWithGrouplike};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hochschild::CochainComplex;
use crate::io::{parse_algebra, parse_extension, parse_hopf};
use crate::iso::verify_isomorphism;
use crate::relative::RelativeTensor;
use crate::report::{Check, Report};
use crate::simplicial::{gs_compare, parse_complex, DEFAULT_GS_CAP};

/// Upper bound on `(dim A)^N` for the tensor-power based commands.
pub const AMBIENT_CAP: usize = 1 << 20;

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// required to match the input files when set; the prime for `gs-compare`
    pub field: Option<u64>,
    pub max_degree: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    /// maximal `dim A` for `gs-compare`
    pub cap: usize,
    pub degree_cap: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: None,
            max_degree: None,
            trials: 50,
            seed: 0,
            cap: DEFAULT_GS_CAP,
            degree_cap: 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoringKind {
    Endo,
    Sweedler,
    Hopf,
    HopfDual,
}

impl CoringKind {
    pub fn name(self) -> &'static str {
        match self {
            CoringKind::Endo => "endo",
            CoringKind::Sweedler => "sweedler",
            CoringKind::Hopf => "hopf",
            CoringKind::HopfDual => "hopf-dual",
        }
    }
}

impl RunConfig {
    fn degree(&self, default: usize) -> Result<usize> {
        let n = self.max_degree.unwrap_or(default);
        if n == 0 {
            return Err(Error::InvalidInput("--max-degree must be positive".into()));
        }
        if n > self.degree_cap {
            return Err(Error::SizeLimit(format!(
                "max degree {n} exceeds the cap {}",
                self.degree_cap
            )));
        }
        Ok(n)
    }

    fn check_field(&self, f: FieldSpec) -> Result<()> {
        match self.field {
            Some(p) if p != f.characteristic() as u64 => Err(Error::InvalidInput(format!(
                "--field {p} disagrees with the input file (GF({}))",
                f.characteristic()
            ))),
            _ => Ok(()),
        }
    }

    fn args(&self, command_args: &[(&str, String)]) -> BTreeMap<String, String> {
        let mut m: BTreeMap<String, String> = command_args
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        m.insert("seed".into(), self.seed.to_string());
        m.insert("trials".into(), self.trials.to_string());
        m
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn check_ambient(dim_a: usize, n: usize) -> Result<()> {
    let size = (dim_a as u128).pow(n as u32);
    if size > AMBIENT_CAP as u128 {
        return Err(Error::SizeLimit(format!(
            "(dim A)^N = {dim_a}^{n} exceeds {AMBIENT_CAP}"
        )));
    }
    Ok(())
}

fn load_extension(path: &Path, cfg: &RunConfig, n: usize) -> Result<Extension> {
    let e = parse_extension(&read(path)?)?;
    cfg.check_field(e.field())?;
    let report = e.validate();
    if !report.passed() {
        return Err(Error::AxiomFailure(format!(
            "{}: {:?}",
            path.display(),
            report.violations
        )));
    }
    check_ambient(e.ambient().dim(), n)?;
    Ok(e)
}

fn load_hopf(path: &Path, cfg: &RunConfig) -> Result<HopfData> {
    let h = parse_hopf(&read(path)?)?;
    cfg.check_field(h.algebra().field())?;
    let report = h.validate();
    if !report.passed() {
        return Err(Error::AxiomFailure(format!(
            "{}: {:?}",
            path.display(),
            report.failures
        )));
    }
    Ok(h)
}

fn dga_check<T: Serialize>(name: &str, passed: bool, detail: &T) -> Check {
    Check::new(name, passed).detail(detail)
}

/// Axioms of algebra, extension or Hopf files (the kind is read off the keys).
pub fn cmd_validate(paths: &[&Path], cfg: &RunConfig) -> Result<Report> {
    let mut checks = Vec::new();
    for path in paths {
        let text = read(path)?;
        let value: serde_json::Value = serde_json::from_str(&text)?;
        let label = path.file_name().map_or_else(
            || path.display().to_string(),
            |s| s.to_string_lossy().into_owned(),
        );
        if value.get("sub").is_some() {
            let e = parse_extension(&text)?;
            cfg.check_field(e.field())?;
            let r = e.validate();
            let mut c =
                Check::new(format!("{label}: extension axioms"), r.passed()).detail(&r.violations);
            if r.passed() {
                c = c.dims(
                    "A, B, centralizer",
                    vec![e.ambient().dim(), e.sub().dim(), centralizer(&e).dim()],
                );
            }
            checks.push(c);
        } else if value.get("coproduct").is_some() {
            let h = parse_hopf(&text)?;
            cfg.check_field(h.algebra().field())?;
            let r = h.validate();
            checks.push(Check::new(format!("{label}: bialgebra axioms"), r.passed()).detail(&r));
        } else {
            let a = parse_algebra(&text)?;
            cfg.check_field(a.field())?;
            let r = a.validate();
            checks.push(
                Check::new(format!("{label}: algebra axioms"), r.passed()).detail(&r.violations),
            );
        }
    }
    let files = paths
        .iter()
        .map(|p| p.display().to_string())
        .collect::<Vec<_>>()
        .join(" ");
    Ok(Report::new(
        "validate",
        cfg.args(&[("files", files)]),
        checks,
    ))
}

/// Hochschild dims, and Amitsur dims of the endomorphism coring when `f_2` is bijective.
pub fn cmd_cohomology(path: &Path, cfg: &RunConfig) -> Result<Report> {
    let n = cfg.degree(3)?;
    let e = load_extension(path, cfg, n.max(2))?;
    let cc = CochainComplex::build(&e, n.max(2))?;
    let mut h = cc.cohomology_dims();
    h.truncate(n);
    let mut checks = vec![Check::new("hochschild_cohomology", true)
        .dims("cochains", cc.dims()[..=n].to_vec())
        .dims("H", h.clone())];
    match endo_coring(&cc) {
        Ok((coring, cert)) => {
            checks.push(Check::new("d2_certificate", true).detail(&cert));
            let ac = AmitsurComplex::build(&coring, n)?;
            let ha = ac.cohomology_dims();
            checks.push(
                Check::new("amitsur_cohomology", true)
                    .dims("omega", ac.dims())
                    .dims("H", ha.clone()),
            );
            checks.push(
                Check::new("cohomology_match", ha == h)
                    .dims("hochschild", h)
                    .dims("amitsur", ha),
            );
        }
        Err(Error::NoD2Certificate { detail }) => {
            let cert = build_f2(&cc)?;
            checks.push(Check::downgraded("d2_certificate", detail.clone()).detail(&cert));
            checks.push(Check::downgraded(
                "amitsur_cohomology",
                format!("skipped, no depth-two certificate: {detail}"),
            ));
        }
        Err(err) => return Err(err),
    }
    let args = cfg.args(&[
        ("extension", path.display().to_string()),
        ("max_degree", n.to_string()),
    ]);
    Ok(Report::new("cohomology", args, checks))
}

fn coring_of(
    path: &Path,
    kind: CoringKind,
    cfg: &RunConfig,
    n: usize,
) -> Result<CoringWithGrouplike> {
    match kind {
        CoringKind::Endo => {
            let e = load_extension(path, cfg, n.max(2))?;
            Ok(endo_coring(&CochainComplex::build(&e, 2)?)?.0)
        }
        CoringKind::Sweedler => {
            let e = load_extension(path, cfg, 2 * n.max(2))?;
            sweedler_coring(&RelativeTensor::build(&e, 2)?)
        }
        CoringKind::Hopf => hopf_coring(&load_hopf(path, cfg)?),
        CoringKind::HopfDual => hopf_coring(&dual_hopf(&load_hopf(path, cfg)?)?),
    }
}

/// Amitsur complex of one of the built-in corings: axioms, DGA laws, cohomology.
pub fn cmd_amitsur(path: &Path, kind: CoringKind, cfg: &RunConfig) -> Result<Report> {
    let n = cfg.degree(3)?;
    let coring = coring_of(path, kind, cfg, n)?;
    check_ambient(coring.carrier_dim(), n)?;
    let failures = coring.axiom_failures();
    let mut checks = vec![Check::new("coring_axioms", failures.is_empty())
        .dims(
            "base, carrier",
            vec![coring.base().dim(), coring.carrier_dim()],
        )
        .detail(&failures)];
    let ac = AmitsurComplex::build(&coring, n)?;
    let dga = ac.verify_dga(cfg.trials, &mut ChaCha8Rng::seed_from_u64(cfg.seed));
    checks.push(dga_check("amitsur_dga", dga.passed(), &dga));
    checks.push(
        Check::new("amitsur_cohomology", true)
            .dims("omega", ac.dims())
            .dims("H", ac.cohomology_dims()),
    );
    let args = cfg.args(&[
        ("input", path.display().to_string()),
        ("coring", kind.name().to_string()),
        ("max_degree", n.to_string()),
    ]);
    Ok(Report::new("amitsur", args, checks))
}

/// The comparison map from the Amitsur complex to Hochschild cochains.
/// A missing certificate is a failed check.
pub fn cmd_verify_iso(path: &Path, cfg: &RunConfig) -> Result<Report> {
    let n = cfg.degree(3)?;
    if n < 2 {
        return Err(Error::InvalidInput(
            "verify-iso needs --max-degree at least 2".into(),
        ));
    }
    let e = load_extension(path, cfg, n)?;
    let args = cfg.args(&[
        ("extension", path.display().to_string()),
        ("max_degree", n.to_string()),
    ]);
    let cc = CochainComplex::build(&e, n)?;
    let (coring, cert) = match endo_coring(&cc) {
        Ok(x) => x,
        Err(Error::NoD2Certificate { detail }) => {
            let cert = build_f2(&cc)?;
            let diagnostic = format!("no depth-two certificate: {detail}");
            let c = Check::new("d2_certificate", false)
                .detail(&serde_json::json!({ "certificate": cert, "diagnostic": diagnostic }));
            return Ok(Report::new("verify-iso", args, vec![c]));
        }
        Err(err) => return Err(err),
    };
    let ac = AmitsurComplex::build(&coring, n)?;
    let hochschild_dga = cc.verify_dga(cfg.trials, &mut ChaCha8Rng::seed_from_u64(cfg.seed))?;
    let amitsur_dga = ac.verify_dga(
        cfg.trials,
        &mut ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1)),
    );
    let w = verify_isomorphism(
        &cc,
        &ac,
        &cert,
        cfg.trials,
        &mut ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2)),
    )?;
    let mut checks = vec![
        Check::new("d2_certificate", true).detail(&cert),
        dga_check("hochschild_dga", hochschild_dga.passed(), &hochschild_dga),
        dga_check("amitsur_dga", amitsur_dga.passed(), &amitsur_dga),
    ];
    checks.push(
        Check::new("f_bijective", w.degrees.iter().all(|d| d.bijective))
            .dims("rank", w.degrees.iter().map(|d| d.rank).collect()),
    );
    checks.push(Check::new(
        "chain_map",
        w.degrees.iter().all(|d| d.chain_map != Some(false)),
    ));
    checks.push(Check::new(
        "f2_matches_certificate",
        w.f2_matches_certificate,
    ));
    checks.push(dga_check(
        "multiplicative",
        w.multiplicativity.iter().all(|m| m.failures == 0),
        &w.multiplicativity,
    ));
    checks.push(
        Check::new(
            "cohomology_match",
            w.amitsur_cohomology == w.hochschild_cohomology,
        )
        .dims("hochschild", w.hochschild_cohomology.clone())
        .dims("amitsur", w.amitsur_cohomology.clone()),
    );
    checks.push(dga_check("witness", w.passed(), &w.degrees));
    Ok(Report::new("verify-iso", args, checks))
}

/// Relative Hochschild cohomology of the incidence algebra against simplicial cohomology.
pub fn cmd_gs(path: &Path, cfg: &RunConfig) -> Result<Report> {
    let n = cfg.degree(1)?;
    let s = parse_complex(&read(path)?)?;
    let field = FieldSpec::new(cfg.field.unwrap_or(5))?;
    let r = gs_compare(&s, field, n, cfg.cap)?;
    let mut checks = Vec::new();
    for (k, &m) in r.matches.iter().enumerate() {
        checks.push(
            Check::new(format!("degree_{k}"), m)
                .dims("hochschild", vec![r.hochschild[k]])
                .dims("simplicial", vec![r.simplicial[k]]),
        );
    }
    checks.push(
        Check::new("gs_compare", r.passed())
            .dims("hochschild", r.hochschild.clone())
            .dims("simplicial", r.simplicial.clone())
            .dims("faces, A, B", vec![r.faces, r.dim_a, r.dim_b]),
    );
    let args = cfg.args(&[
        ("complex", path.display().to_string()),
        ("field", field.characteristic().to_string()),
        ("max_degree", n.to_string()),
        ("cap", cfg.cap.to_string()),
    ]);
    Ok(Report::new("gs-compare", args, checks))
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfComparison {
    pub dim_k: usize,
    /// `dim H^n(K, k 1; K)` for `n < N`
    pub hochschild: Vec<usize>,
    /// `dim H^n` of the Amitsur complex of the dual coalgebra with grouplike its unit
    pub cobar: Vec<usize>,
    /// `(n, hochschild == dim K * cobar)` for `2 <= n < N`
    pub equal: Vec<(usize, bool)>,
}

/// Both sides of the Hopf comparison, from independent rank computations.
pub fn hopf_compare(h: &HopfData, n: usize) -> Result<HopfComparison> {
    let e = Extension::over_ground(h.algebra().clone());
    let cc = CochainComplex::build(&e, n)?;
    let ac = AmitsurComplex::build(&hopf_coring(&dual_hopf(h)?)?, n)?;
    let hochschild = cc.cohomology_dims();
    let cobar = ac.cohomology_dims();
    let dim_k = h.dim();
    let equal = (2..n)
        .map(|k| (k, hochschild[k] == dim_k * cobar[k]))
        .collect();
    Ok(HopfComparison {
        dim_k,
        hochschild,
        cobar,
        equal,
    })
}

pub fn cmd_hopf(path: &Path, cfg: &RunConfig) -> Result<Report> {
    let n = cfg.degree(4)?;
    let h = load_hopf(path, cfg)?;
    check_ambient(h.dim(), n)?;
    let c = hopf_compare(&h, n)?;
    let mut checks = vec![Check::new("bialgebra_axioms", true)];
    for &(k, eq) in &c.equal {
        checks.push(
            Check::new(format!("degree_{k}"), eq)
                .dims("hochschild", vec![c.hochschild[k]])
                .dims("dim_k_times_cobar", vec![c.dim_k * c.cobar[k]]),
        );
    }
    checks.push(Check::new("hopf_compare", c.equal.iter().all(|e| e.1)).detail(&c));
    let args = cfg.args(&[
        ("hopf", path.display().to_string()),
        ("max_degree", n.to_string()),
    ]);
    Ok(Report::new("hopf-check", args, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::data_dir;
    use crate::report::Status;

    fn data(rel: &str) -> std::path::PathBuf {
        data_dir().join(rel)
    }

    #[test]
    fn cohomology_m2() {
        let r = cmd_cohomology(&data("extensions/m2-gf5.json"), &RunConfig::default()).unwrap();
        assert!(r.passed);
        let m = r
            .checks
            .iter()
            .find(|c| c.name == "cohomology_match")
            .unwrap();
        assert_eq!(m.dims["hochschild"], vec![1, 0, 0]);
    }

    #[test]
    fn cohomology_downgrades_without_certificate() {
        let r = cmd_cohomology(
            &data("extensions/gf7-s3-over-c2.json"),
            &RunConfig::default(),
        )
        .unwrap();
        assert!(r.passed);
        assert!(r.checks.iter().any(|c| c.status == Status::Downgraded));
        let v = cmd_verify_iso(
            &data("extensions/gf7-s3-over-c2.json"),
            &RunConfig::default(),
        )
        .unwrap();
        assert!(!v.passed);
    }

    #[test]
    fn b_equal_a_gives_center() {
        let r = cmd_cohomology(
            &data("extensions/m2-over-m2-gf5.json"),
            &RunConfig::default(),
        )
        .unwrap();
        assert_eq!(r.checks[0].dims["H"], vec![1, 0, 0]);
    }

    #[test]
    fn hopf_semisimple_and_modular() {
        let c2 = hopf_compare(&crate::corpus::hopf("hopf-gf2-c2").unwrap(), 4).unwrap();
        assert_eq!(c2.equal, vec![(2, true), (3, true)]);
        assert_eq!(c2.cobar[2..], [1, 1]);
        let c3 = hopf_compare(&crate::corpus::hopf("hopf-gf3-c2").unwrap(), 4).unwrap();
        assert_eq!(c3.hochschild[1..], [0, 0, 0]);
        assert_eq!(c3.cobar[2..], [0, 0]);
    }

    #[test]
    fn field_mismatch_and_caps() {
        let cfg = RunConfig {
            field: Some(7),
            ..RunConfig::default()
        };
        assert!(matches!(
            cmd_cohomology(&data("extensions/m2-gf5.json"), &cfg),
            Err(Error::InvalidInput(_))
        ));
        let cfg = RunConfig {
            max_degree: Some(5),
            ..RunConfig::default()
        };
        assert!(matches!(
            cmd_cohomology(&data("extensions/m2-gf5.json"), &cfg),
            Err(Error::SizeLimit(_))
        ));
    }
}
