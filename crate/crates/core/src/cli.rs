//! Command-line surface: load groups and Rees matrix semigroups from files,
//! run named verification suites, and emit deterministic line-oriented
//! reports.
//!
//! Exit status contract: `0` iff the report's overall verdict is PASS, `1`
//! for a FAIL verdict, `2` for usage errors, `3` for parse or validation
//! errors. All report output goes to standard output and is byte-identical
//! across `--jobs` settings; diagnostics go to standard error.

use std::io::Write;
use std::path::{Path, PathBuf};

use crate::counterexample::{
    embedding_verdict, enumerate_injective_iotas, order3_census, sandwich_scan, CounterInstance,
    EmbeddingVerdict,
};
use crate::embed::{central_embedding, general_embedding, kk_embedding};
use crate::group::FiniteGroup;
use crate::io::{read_artifact, read_group, read_rms, Artifact};
use crate::rees::{enumerate_group_congruences, ReesMatrixSemigroup};
use crate::report::{Report, Status};
use crate::semigroup::{green_classes, is_completely_simple, FiniteSemigroup};

pub const USAGE: &str = "\
reeswreath — verified computations with completely simple semigroups

USAGE:
    reeswreath verify kk             --group FILE --normal IDS [--jobs N]
    reeswreath verify central        --rms FILE --normal IDS [--jobs N]
    reeswreath verify psi            --rms FILE --normal IDS [--jobs N]
    reeswreath verify counterexample [--jobs N] [--cert PATH]
    reeswreath info FILE [--jobs N]
    reeswreath green FILE [--jobs N]
    reeswreath congruences FILE [--jobs N]

FLAGS:
    --group FILE   group input (line format: `GROUP n` + n table rows)
    --rms FILE     Rees matrix input (`RMS` + GROUP block + `I m` + `LAMBDA k` + k rows)
    --normal IDS   comma-separated element ids spanning a normal subgroup
    --jobs N       worker threads for internal scans (output is identical for any N)
    --cert PATH    write the nonembeddability certificate file

EXIT STATUS:
    0 overall PASS   1 overall FAIL   2 usage error   3 parse/validation error";

enum CliError {
    Usage(String),
    Load(String),
}

#[derive(Default)]
struct Flags {
    group: Option<PathBuf>,
    rms: Option<PathBuf>,
    normal: Option<Vec<usize>>,
    jobs: Option<usize>,
    cert: Option<PathBuf>,
}

fn parse_flags(args: &[String]) -> Result<Flags, CliError> {
    let mut flags = Flags::default();
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut value = |name: &str| {
            it.next().cloned().ok_or_else(|| CliError::Usage(format!("{name} needs a value")))
        };
        match arg.as_str() {
            "--group" => flags.group = Some(PathBuf::from(value("--group")?)),
            "--rms" => flags.rms = Some(PathBuf::from(value("--rms")?)),
            "--cert" => flags.cert = Some(PathBuf::from(value("--cert")?)),
            "--normal" => {
                let raw = value("--normal")?;
                let ids: Result<Vec<usize>, _> =
                    raw.split(',').map(|tok| tok.trim().parse::<usize>()).collect();
                flags.normal = Some(ids.map_err(|_| {
                    CliError::Usage(format!("--normal expects comma-separated ids, got {raw:?}"))
                })?);
            }
            "--jobs" => {
                let raw = value("--jobs")?;
                flags.jobs = Some(raw.parse::<usize>().map_err(|_| {
                    CliError::Usage(format!("--jobs expects a number, got {raw:?}"))
                })?);
            }
            other => return Err(CliError::Usage(format!("unknown flag {other:?}"))),
        }
    }
    Ok(flags)
}

fn need_group(flags: &Flags) -> Result<FiniteGroup, CliError> {
    let path =
        flags.group.as_ref().ok_or_else(|| CliError::Usage("--group FILE is required".into()))?;
    read_group(path).map_err(|e| CliError::Load(format!("{}: {e}", path.display())))
}

fn need_rms(flags: &Flags) -> Result<ReesMatrixSemigroup, CliError> {
    let path =
        flags.rms.as_ref().ok_or_else(|| CliError::Usage("--rms FILE is required".into()))?;
    read_rms(path).map_err(|e| CliError::Load(format!("{}: {e}", path.display())))
}

fn need_normal(flags: &Flags) -> Result<Vec<usize>, CliError> {
    flags.normal.clone().ok_or_else(|| CliError::Usage("--normal IDS is required".into()))
}

fn suite_kk(flags: &Flags) -> Result<Report, CliError> {
    let group = need_group(flags)?;
    let normal = need_normal(flags)?;
    let kk = kk_embedding(&group, &normal).map_err(|e| CliError::Load(e.to_string()))?;
    let mut report = Report::new();
    report.pass(
        "kk-sizes",
        format!(
            "group={} normal={} quotient={} target={}",
            group.order(),
            kk.normal.len(),
            kk.h.order(),
            kk.product_group.order()
        ),
    );
    let check = kk.verify_embedding();
    report.check(
        "kk-embedding",
        check.morphism && check.injective,
        format!(
            "morphism={} injective={} pairs={}",
            check.morphism,
            check.injective,
            group.order() * group.order()
        ),
    );
    match kk.verify_cocycle_identity() {
        None => report.pass(
            "kk-cocycle",
            format!("f(gh)=f(g)*translate(f(h)) on all {} pairs", group.order() * group.order()),
        ),
        Some((g, h)) => report.fail("kk-cocycle", format!("violated at g={g} h={h}")),
    }
    Ok(report)
}

fn suite_central(flags: &Flags) -> Result<Report, CliError> {
    let rms = need_rms(flags)?;
    let normal = need_normal(flags)?;
    let mut report = Report::new();
    let central = rms.is_central().map_err(|e| CliError::Load(e.to_string()))?;
    if central {
        report.pass("central-instance", format!("size={} all sandwich entries central", rms.element_count()));
    } else {
        let (centre, _) = rms.group().centre_and_orders();
        let witness = (0..rms.lambda_count())
            .flat_map(|l| (0..rms.i_count()).map(move |i| (l, i)))
            .find(|&(l, i)| centre.binary_search(&rms.sandwich_entry(l, i)).is_err());
        let (l, i) = witness.expect("a non-central instance has a non-central entry");
        report.fail(
            "central-instance",
            format!("sandwich entry ({l},{i})={} is not central", rms.sandwich_entry(l, i)),
        );
    }
    let nu = central_embedding(&rms, &normal).map_err(|e| CliError::Load(e.to_string()))?;
    let check = nu.verify(&rms);
    let detail = match check.witness {
        None => format!(
            "morphism={} injective={} target={}",
            check.morphism,
            check.injective,
            nu.wreath.product.size()
        ),
        Some((a, b)) => format!(
            "morphism={} injective={} target={} witness=({a},{b})",
            check.morphism,
            check.injective,
            nu.wreath.product.size()
        ),
    };
    report.check("central-embedding", check.morphism && check.injective, detail);
    Ok(report)
}

fn suite_psi(flags: &Flags) -> Result<Report, CliError> {
    let rms = need_rms(flags)?;
    let normal = need_normal(flags)?;
    let psi = general_embedding(&rms, &normal).map_err(|e| CliError::Load(e.to_string()))?;
    let mut report = Report::new();
    report.pass(
        "psi-sizes",
        format!(
            "source={} v={} target={}",
            rms.element_count(),
            psi.v.element_count(),
            psi.product.size()
        ),
    );
    let check = psi.verify(&rms);
    report.check(
        "psi-embedding",
        check.morphism && check.injective,
        format!(
            "morphism={} injective={} pairs={}",
            check.morphism,
            check.injective,
            rms.element_count() * rms.element_count()
        ),
    );
    match psi.verify_cocycle_product_identity(&rms) {
        None => report.pass("psi-cocycle-product", "f(g*p*h) chain law holds on all tuples"),
        Some((g, x, lam, j)) => report
            .fail("psi-cocycle-product", format!("violated at g={g} h={x} lambda={lam} j={j}")),
    }
    report.check(
        "psi-maximal-subgroups",
        psi.verify_maximal_subgroups(),
        format!("every maximal subgroup of V is a direct power of order {}", psi.kk.power_group.order()),
    );
    Ok(report)
}

fn suite_counterexample(flags: &Flags) -> Result<Report, CliError> {
    let inst = CounterInstance::standard();
    let mut report = Report::new();
    report.check(
        "instance",
        inst.rms.is_central() == Ok(false) && inst.rms.is_normalized(),
        format!(
            "size={} group={} central=false normalized=true",
            inst.rms.element_count(),
            inst.group.order()
        ),
    );
    match inst.kk() {
        Ok(kk) => {
            let census = order3_census(&kk);
            report.check(
                "census",
                census.mismatches == 0 && census.order3_direct == census.order3_closed_form,
                format!(
                    "total={} order3={} closed_form={} mismatches={}",
                    census.total, census.order3_direct, census.order3_closed_form, census.mismatches
                ),
            );
        }
        Err(e) => report.fail("census", e.to_string()),
    }
    match enumerate_injective_iotas(&inst) {
        Ok(iotas) => report.check(
            "iotas",
            iotas.count() > 0,
            format!(
                "count={} doubling={} halving={} distinct_h={}",
                iotas.count(),
                iotas.doubling_count,
                iotas.halving_count,
                iotas.distinct_h.len()
            ),
        ),
        Err(e) => report.fail("iotas", e.to_string()),
    }
    match sandwich_scan(&inst) {
        Ok(scan) => report.check(
            "frames",
            scan.clean(),
            format!(
                "frames={} admissible={} value_checks={} pointwise_checks={} route_mismatches={}",
                scan.frames,
                scan.admissible_frames,
                scan.value_checks,
                scan.pointwise_checks,
                scan.route_mismatches
            ),
        ),
        Err(e) => report.fail("frames", e.to_string()),
    }
    match embedding_verdict(&inst.rms, &inst.normal_members) {
        Ok(EmbeddingVerdict::NotEmbeddable(cert)) => {
            report.pass(
                "verdict",
                format!(
                    "IOTAS={} FRAMES={} ADMISSIBLE_H_FROM_FRAMES={} not embeddable",
                    cert.iota_count, cert.frame_count, cert.admissible_from_frames
                ),
            );
            if let Some(path) = &flags.cert {
                std::fs::write(path, cert.render())
                    .map_err(|e| CliError::Load(format!("{}: {e}", path.display())))?;
            }
        }
        Ok(EmbeddingVerdict::EmbeddingExists { target_size, .. }) => {
            report.fail("verdict", format!("unexpected embedding into size {target_size}"));
        }
        Err(e) => report.fail("verdict", e.to_string()),
    }
    Ok(report)
}

fn load_artifact_for(path: &Path) -> Result<Artifact, CliError> {
    read_artifact(path).map_err(|e| CliError::Load(format!("{}: {e}", path.display())))
}

fn semigroup_of(artifact: &Artifact) -> FiniteSemigroup {
    match artifact {
        Artifact::Group(g) => g.as_semigroup("G"),
        Artifact::Rms(rms) => rms.as_semigroup("S"),
    }
}

fn suite_info(path: &Path) -> Result<Report, CliError> {
    let artifact = load_artifact_for(path)?;
    let mut report = Report::new();
    match &artifact {
        Artifact::Group(g) => {
            let (centre, orders) = g.centre_and_orders();
            let abelian = centre.len() == g.order();
            let exponent = orders.iter().fold(1usize, |acc, &o| lcm(acc, o));
            report.pass(
                "group",
                format!("order={} abelian={} centre={} exponent={}", g.order(), abelian, centre.len(), exponent),
            );
        }
        Artifact::Rms(rms) => {
            report.pass(
                "rms",
                format!(
                    "size={} group={} i={} lambda={}",
                    rms.element_count(),
                    rms.group().order(),
                    rms.i_count(),
                    rms.lambda_count()
                ),
            );
            let normalized = rms.is_normalized();
            let central = if normalized {
                rms.is_central().map_err(|e| CliError::Load(e.to_string()))?.to_string()
            } else {
                "n/a (not normalized)".to_string()
            };
            report.pass("structure", format!("normalized={normalized} central={central}"));
        }
    }
    let s = semigroup_of(&artifact);
    let green = green_classes(&s);
    report.pass(
        "green",
        format!(
            "r_classes={} l_classes={} h_classes={} idempotents={}",
            green.r_count,
            green.l_count,
            green.h_count,
            s.idempotents().len()
        ),
    );
    Ok(report)
}

fn suite_green(path: &Path) -> Result<Report, CliError> {
    let artifact = load_artifact_for(path)?;
    let s = semigroup_of(&artifact);
    let green = green_classes(&s);
    let mut report = Report::new();
    report.pass(
        "green-classes",
        format!("r={} l={} h={}", green.r_count, green.l_count, green.h_count),
    );
    report.pass("green-idempotents", format!("count={}", s.idempotents().len()));
    report.pass(
        "green-structure",
        format!("completely_simple={}", is_completely_simple(&s)),
    );
    Ok(report)
}

fn suite_congruences(path: &Path) -> Result<Report, CliError> {
    let artifact = load_artifact_for(path)?;
    let rms = match artifact {
        Artifact::Rms(rms) => rms,
        Artifact::Group(_) => {
            return Err(CliError::Load("congruences requires an RMS file".into()))
        }
    };
    let congruences =
        enumerate_group_congruences(&rms).map_err(|e| CliError::Load(e.to_string()))?;
    let mut report = Report::new();
    report.pass("congruences", format!("count={}", congruences.len()));
    for (ix, cong) in congruences.iter().enumerate() {
        report.pass(
            &format!("congruence-{ix}"),
            format!(
                "normal={} quotient={} kernel={} classes={}",
                cong.normal.len(),
                cong.quotient.quotient.order(),
                cong.kernel_members.len(),
                cong.class_count()
            ),
        );
    }
    Ok(report)
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(mut a: usize, mut b: usize) -> usize {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    a / gcd(a, b) * b
}

fn dispatch(args: &[String]) -> Result<Report, CliError> {
    let command = args.first().ok_or_else(|| CliError::Usage("missing command".into()))?;
    match command.as_str() {
        "verify" => {
            let suite =
                args.get(1).ok_or_else(|| CliError::Usage("verify needs a suite name".into()))?;
            let flags = parse_flags(&args[2..])?;
            if flags.cert.is_some() && suite != "counterexample" {
                return Err(CliError::Usage(
                    "--cert only applies to `verify counterexample`".into(),
                ));
            }
            let body = || match suite.as_str() {
                "kk" => suite_kk(&flags),
                "central" => suite_central(&flags),
                "psi" => suite_psi(&flags),
                "counterexample" => suite_counterexample(&flags),
                other => Err(CliError::Usage(format!("unknown suite {other:?}"))),
            };
            with_jobs(flags.jobs, body)
        }
        "info" | "green" | "congruences" => {
            let path = args
                .get(1)
                .ok_or_else(|| CliError::Usage(format!("{command} needs a FILE argument")))?;
            let flags = parse_flags(&args[2..])?;
            if flags.group.is_some() || flags.rms.is_some() || flags.normal.is_some() {
                return Err(CliError::Usage(format!("{command} takes only a positional FILE")));
            }
            if flags.cert.is_some() {
                return Err(CliError::Usage(
                    "--cert only applies to `verify counterexample`".into(),
                ));
            }
            let path = PathBuf::from(path);
            let body = || match command.as_str() {
                "info" => suite_info(&path),
                "green" => suite_green(&path),
                _ => suite_congruences(&path),
            };
            with_jobs(flags.jobs, body)
        }
        "help" | "--help" | "-h" => Err(CliError::Usage(String::new())),
        other => Err(CliError::Usage(format!("unknown command {other:?}"))),
    }
}

fn with_jobs<F>(jobs: Option<usize>, body: F) -> Result<Report, CliError>
where
    F: FnOnce() -> Result<Report, CliError> + Send,
{
    match jobs {
        None => body(),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Load(format!("thread pool: {e}")))?;
            pool.install(body)
        }
    }
}

/// Runs the CLI on pre-split arguments, writing the report to `out`.
/// Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    match dispatch(args) {
        Ok(report) => {
            if out.write_all(report.render().as_bytes()).is_err() {
                return 3;
            }
            match report.overall() {
                Status::Pass => 0,
                Status::Fail => 1,
            }
        }
        Err(CliError::Usage(message)) => {
            if !message.is_empty() {
                eprintln!("usage error: {message}");
                eprintln!();
            }
            eprintln!("{USAGE}");
            2
        }
        Err(CliError::Load(message)) => {
            eprintln!("error: {message}");
            3
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(name: &str) -> String {
        format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    fn run_vec(args: &[&str]) -> (i32, String) {
        let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        let code = run(&owned, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn kk_suite_passes_on_bundled_group() {
        let path = data("z4.grp");
        let (code, out) = run_vec(&["verify", "kk", "--group", &path, "--normal", "0,2"]);
        assert_eq!(code, 0, "output: {out}");
        assert!(out.contains("CHECK kk-embedding PASS"));
        assert!(out.ends_with("VERDICT PASS\n"));
    }

    #[test]
    fn central_suite_passes_and_fails_appropriately() {
        let path = data("z4c.rms");
        let (code, out) = run_vec(&["verify", "central", "--rms", &path, "--normal", "0,2"]);
        assert_eq!(code, 0, "output: {out}");
        assert!(out.contains("CHECK central-embedding PASS"));

        let path = data("order21.rms");
        let normal = "0,1,2,3,4,5,6";
        let (code, out) = run_vec(&["verify", "central", "--rms", &path, "--normal", normal]);
        assert_eq!(code, 1, "output: {out}");
        assert!(out.contains("CHECK central-instance FAIL"));
        assert!(out.contains("CHECK central-embedding FAIL"));
        assert!(out.contains("witness=("));
        assert!(out.ends_with("VERDICT FAIL\n"));
    }

    #[test]
    fn info_suite_reports_green_coordinates() {
        let path = data("order21.rms");
        let (code, out) = run_vec(&["info", &path]);
        assert_eq!(code, 0, "output: {out}");
        assert!(out.contains("size=84"));
        assert!(out.contains("central=false"));
        assert!(out.contains("r_classes=2 l_classes=2 h_classes=4"));
    }

    #[test]
    fn congruences_suite_counts_them() {
        let path = data("order21.rms");
        let (code, out) = run_vec(&["congruences", &path]);
        assert_eq!(code, 0, "output: {out}");
        assert!(out.contains("CHECK congruences PASS count=2"));
        assert!(out.contains("normal=7 quotient=3 kernel=28"));
    }

    #[test]
    fn usage_and_load_errors_use_reserved_exit_codes() {
        let (code, _) = run_vec(&["verify", "nonsense"]);
        assert_eq!(code, 2);
        let (code, _) = run_vec(&["verify", "kk", "--group"]);
        assert_eq!(code, 2);
        let (code, _) = run_vec(&["verify", "kk", "--group", "/nonexistent.grp", "--normal", "0"]);
        assert_eq!(code, 3);
        let (code, _) = run_vec(&[]);
        assert_eq!(code, 2);
        let (code, _) = run_vec(&["congruences", &data("z4.grp")]);
        assert_eq!(code, 3);
        let (code, _) = run_vec(&["info", &data("z4.grp"), "--cert", "/tmp/x"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn jobs_flag_does_not_change_output() {
        let path = data("z4c.rms");
        let (c1, o1) =
            run_vec(&["verify", "central", "--rms", &path, "--normal", "0,2", "--jobs", "1"]);
        let (c2, o2) =
            run_vec(&["verify", "central", "--rms", &path, "--normal", "0,2", "--jobs", "4"]);
        assert_eq!(c1, 0);
        assert_eq!(c2, 0);
        assert_eq!(o1, o2);
    }
}
