//! Command implementations and the exit-code contract:
//!
//! * 0 — success, all requested checks passed
//! * 1 — a structure failed its axioms (or a conversion met a degenerate
//!   or non-invariant pairing); the report carries the exact witness
//! * 2 — unusable input: unreadable file, malformed JSON or rationals,
//!   missing blocks, bad generator parameters
//!
//! Reports go to stdout or `--out`; human summaries go to stderr. A
//! relative `--out` resolves against `FROBKIT_OUT_DIR` when that is set.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use frobkit::error::Error;
use frobkit::exact::Scalar;
use frobkit::finvect::Mor;
use frobkit::frobenius::{
    coalgebra_from_pairing, kappa_from_counit, pairing_from_phi, validate_pairing,
};
use frobkit::nakayama::{nakayama, symmetrize, InnerSearch};
use frobkit::structures::{
    check_algebra, check_coalgebra, check_frobenius_compat, check_module_morphism,
    check_nondegenerate, dual_actions, Algebra, CheckReport, ModuleAction, NondegWitness, Side,
};
use frobkit::zoo;

use crate::format::{self, LoadedStructures};
use crate::report::{self, CheckDoc, CheckEntry, ErrorDoc, InnerDoc, NakayamaDoc};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "frobkit",
    version,
    about = "Exact toolkit for Frobenius structures given by structure constants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed recorded in reports and used by any randomized property
    /// checks (the shipped checks are exhaustive and exact).
    #[arg(long, global = true, default_value_t = frobkit::sample::DEFAULT_SEED)]
    pub seed: u64,

    /// Write the report or generated file here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Report format; generated algebra files are always JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
pub enum Command {
    /// Validate every structure block in an algebra file, axiom by axiom.
    Check { path: PathBuf },

    /// Convert one presentation of a Frobenius structure into another.
    Convert {
        path: PathBuf,
        #[arg(long, value_enum)]
        from: Presentation,
        #[arg(long, value_enum)]
        to: Presentation,
    },

    /// Compute the Nakayama automorphism of the pairing in a file.
    Nakayama {
        path: PathBuf,
        /// When the automorphism is inner, also emit the symmetrized
        /// pairing.
        #[arg(long)]
        symmetrize: bool,
    },

    /// Write an example algebra as a structure-constant file.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Presentation {
    Deltaeps,
    Kappa,
    Phi,
}

#[derive(Subcommand)]
pub enum GenerateKind {
    /// The full matrix algebra on an n-dimensional space.
    Matrix { n: usize },
    /// A group algebra from a built-in table.
    Group {
        /// Cyclic group of this order.
        #[arg(long, conflicts_with = "s3")]
        cyclic: Option<usize>,
        /// The symmetric group on three letters.
        #[arg(long)]
        s3: bool,
    },
    /// The quantum plane at a rational parameter q ≠ 0, e.g. 2 or -1/2.
    QuantumPlane {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// The canonical Frobenius algebra on X ⊗ X* for dim X = dim.
    CanonicalDual { dim: usize },
}

struct Output {
    payload: String,
    summary: String,
    exit: i32,
}

pub fn run(cli: Cli) -> i32 {
    let out = resolve_out(cli.out.as_deref());
    let output = match &cli.command {
        Command::Check { path } => run_check(path, cli.seed, cli.format),
        Command::Convert { path, from, to } => run_convert(path, *from, *to),
        Command::Nakayama { path, symmetrize } => {
            run_nakayama(path, *symmetrize, cli.seed, cli.format)
        }
        Command::Generate { kind } => run_generate(kind),
    };
    match out {
        Some(path) => {
            if let Err(err) = std::fs::write(&path, &output.payload) {
                eprintln!("cannot write {}: {err}", path.display());
                return 2;
            }
        }
        None => print!("{}", output.payload),
    }
    eprintln!("{}", output.summary);
    output.exit
}

fn resolve_out(out: Option<&Path>) -> Option<PathBuf> {
    let out = out?;
    if out.is_relative() {
        if let Ok(dir) = std::env::var("FROBKIT_OUT_DIR") {
            return Some(PathBuf::from(dir).join(out));
        }
    }
    Some(out.to_path_buf())
}

fn error_output(command: &str, error: &str, reason: String, exit: i32) -> Output {
    let doc = ErrorDoc {
        schema_version: SCHEMA_VERSION,
        command: command.to_owned(),
        error: error.to_owned(),
        reason: reason.clone(),
        witness: None,
    };
    Output {
        payload: report::to_json(&doc),
        summary: format!("{command}: {reason}"),
        exit,
    }
}

fn load(command: &str, path: &Path) -> Result<LoadedStructures, Output> {
    let text = std::fs::read_to_string(path).map_err(|err| {
        error_output(command, "io", format!("cannot read {}: {err}", path.display()), 2)
    })?;
    let file = format::parse(&text)
        .map_err(|err| error_output(command, "parse", err.to_string(), 2))?;
    format::to_structures(&file).map_err(|err| error_output(command, "parse", err.to_string(), 2))
}

fn regular_left_module(a: &Algebra) -> ModuleAction {
    ModuleAction::new(a.clone(), a.carrier().clone(), a.m().clone(), Side::Left)
        .expect("the checked product is associative and unital")
}

fn run_check(path: &Path, seed: u64, fmt: Format) -> Output {
    let loaded = match load("check", path) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let a = &loaded.algebra;
    let mut entries = report::entries_from_report("algebra", &check_algebra(a));
    let algebra_ok = entries.iter().all(|e| e.passed);

    if let Some(c) = &loaded.coalgebra {
        entries.extend(report::entries_from_report("coalgebra", &check_coalgebra(c)));
        let compat = check_frobenius_compat(a, c).expect("same carrier by construction");
        entries.extend(report::entries_from_report("frobenius", &compat));
    }

    if let Some(k) = &loaded.pairing {
        let mut invariance = CheckReport::new();
        let id = a.id();
        let lhs = k.kappa().compose(&a.m().tensor(&id)).expect("shape");
        let rhs = k.kappa().compose(&id.tensor(a.m())).expect("shape");
        invariance.record("invariance", &lhs, &rhs);
        entries.extend(report::entries_from_report("pairing", &invariance));

        let nondeg = check_nondegenerate(k);
        let witness = match &nondeg.witness {
            NondegWitness::NullVector(v) => {
                Some(frobkit::Matrix::new(1, v.len(), v.clone()).expect("row"))
            }
            NondegWitness::Inverse(_) => None,
        };
        entries.push(CheckEntry::with_witness(
            "pairing.nondegenerate",
            nondeg.nondegenerate,
            witness.as_ref(),
        ));
    }

    if let Some(phi) = &loaded.phi {
        entries.push(CheckEntry::bool_only(
            "phi.invertible",
            phi.matrix().rank() == a.dim(),
        ));
        // The module-morphism check needs a valid algebra to build the
        // dual action.
        if algebra_ok {
            let (rho, _) = dual_actions(a).expect("valid algebra");
            let regular = regular_left_module(a);
            entries.push(CheckEntry::bool_only(
                "phi.left_module_morphism",
                check_module_morphism(phi, &regular, &rho).expect("shapes agree"),
            ));
        }
    }

    // Cross-consistency of presentations stored together.
    if let (Some(c), Some(k)) = (&loaded.coalgebra, &loaded.pairing) {
        let eps_m = c.eps().compose(a.m()).expect("shape");
        let mut consistency = CheckReport::new();
        consistency.record("kappa_equals_eps_after_m", &eps_m, k.kappa());
        entries.extend(report::entries_from_report("consistency", &consistency));
    }
    if let (Some(k), Some(phi)) = (&loaded.pairing, &loaded.phi) {
        let mut consistency = CheckReport::new();
        consistency.record("phi_equals_phi_l", phi, k.phi_l());
        entries.extend(report::entries_from_report("consistency", &consistency));
    }

    let passed = entries.iter().all(|e| e.passed);
    let doc = CheckDoc {
        schema_version: SCHEMA_VERSION,
        command: "check".into(),
        seed,
        input: path.display().to_string(),
        passed,
        checks: entries,
    };
    Output {
        payload: render_check(&doc, fmt),
        summary: format!(
            "check {}: {}",
            path.display(),
            if passed { "all axioms hold" } else { "FAILED" }
        ),
        exit: if passed { 0 } else { 1 },
    }
}

fn render_check(doc: &CheckDoc, fmt: Format) -> String {
    match fmt {
        Format::Json => report::to_json(doc),
        Format::Text => {
            let mut text = format!("check {} (seed {})\n", doc.input, doc.seed);
            for entry in &doc.checks {
                let mark = if entry.passed { "ok  " } else { "FAIL" };
                let _ = writeln!(text, "  [{mark}] {}", entry.name);
            }
            let _ = writeln!(text, "result: {}", if doc.passed { "PASS" } else { "FAIL" });
            text
        }
    }
}

/// Every analysis assumes an associative unital product; files are
/// untrusted, so the axioms are re-checked before anything else runs.
fn require_valid_algebra(command: &str, a: &Algebra) -> Result<(), Output> {
    let rpt = check_algebra(a);
    if rpt.passed() {
        Ok(())
    } else {
        Err(error_output(
            command,
            "axiom_failure",
            format!("algebra axioms fail: {}", rpt.failure_summary()),
            1,
        ))
    }
}

fn run_convert(path: &Path, from: Presentation, to: Presentation) -> Output {
    let loaded = match load("convert", path) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let a = &loaded.algebra;
    if let Err(out) = require_valid_algebra("convert", a) {
        return out;
    }

    // Normalize the source presentation into a validated pairing; every
    // target is derived from it.
    let pairing = match from {
        Presentation::Deltaeps => {
            let Some(c) = &loaded.coalgebra else {
                return error_output("convert", "missing_block", "file has no delta/eps block".into(), 2);
            };
            match kappa_from_counit(a, c) {
                Ok(k) => k,
                Err(err) => return convert_failure(err),
            }
        }
        Presentation::Kappa => {
            let Some(k) = &loaded.pairing else {
                return error_output("convert", "missing_block", "file has no kappa block".into(), 2);
            };
            if let Err(err) = validate_pairing(a, k) {
                return convert_failure_with_witness(err, k);
            }
            k.clone()
        }
        Presentation::Phi => {
            let Some(phi) = &loaded.phi else {
                return error_output("convert", "missing_block", "file has no phi block".into(), 2);
            };
            let k = match pairing_from_phi(a, phi) {
                Ok(k) => k,
                Err(err) => return convert_failure(err),
            };
            if let Err(err) = validate_pairing(a, &k) {
                return convert_failure_with_witness(err, &k);
            }
            k
        }
    };

    let mut out_file = format::base_file(a, &loaded.basis_labels);
    match to {
        Presentation::Kappa => {
            out_file.kappa = Some(format::kappa_block(&pairing));
        }
        Presentation::Deltaeps => match coalgebra_from_pairing(a, &pairing) {
            Ok(c) => {
                out_file.delta = Some(format::delta_block(&c));
                out_file.eps = Some(format::eps_block(&c));
            }
            Err(err) => return convert_failure(err),
        },
        Presentation::Phi => {
            out_file.phi = Some(format::matrix_block(pairing.phi_l().matrix()));
        }
    }
    Output {
        payload: format::emit(&out_file),
        summary: format!("convert {}: ok", path.display()),
        exit: 0,
    }
}

fn convert_failure(err: Error) -> Output {
    let (kind, exit) = match &err {
        Error::DegeneratePairing { .. } | Error::NonInvariantPairing | Error::AxiomFailure(_) => {
            ("axiom_failure", 1)
        }
        _ => ("parse", 2),
    };
    error_output("convert", kind, err.to_string(), exit)
}

/// Like [`convert_failure`], with the kernel vector attached when the
/// pairing is degenerate.
fn convert_failure_with_witness(err: Error, k: &frobkit::structures::Pairing) -> Output {
    let reason = err.to_string();
    let mut out = convert_failure(err);
    if out.exit == 1 {
        if let NondegWitness::NullVector(v) = check_nondegenerate(k).witness {
            let doc = ErrorDoc {
                schema_version: SCHEMA_VERSION,
                command: "convert".into(),
                error: "axiom_failure".into(),
                reason,
                witness: Some(vec![v.iter().map(|s| s.to_string()).collect()]),
            };
            out.payload = report::to_json(&doc);
        }
    }
    out
}

fn run_nakayama(path: &Path, want_symmetrize: bool, seed: u64, fmt: Format) -> Output {
    let loaded = match load("nakayama", path) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let a = &loaded.algebra;
    if let Err(out) = require_valid_algebra("nakayama", a) {
        return out;
    }
    let pairing = match (&loaded.pairing, &loaded.coalgebra) {
        (Some(k), _) => k.clone(),
        (None, Some(c)) => match kappa_from_counit(a, c) {
            Ok(k) => k,
            Err(err) => return error_output("nakayama", "axiom_failure", err.to_string(), 1),
        },
        (None, None) => {
            return error_output(
                "nakayama",
                "missing_block",
                "file has neither kappa nor delta/eps".into(),
                2,
            )
        }
    };

    let rpt = match nakayama(a, &pairing) {
        Ok(rpt) => rpt,
        Err(err) => return error_output("nakayama", "axiom_failure", err.to_string(), 1),
    };
    let inner = match &rpt.inner {
        InnerSearch::Witness(unit) => InnerDoc {
            status: "witness".into(),
            unit: Some(point_block(unit.element().vec())),
            inverse: Some(point_block(unit.inverse().vec())),
        },
        InnerSearch::CertifiedAbsent => InnerDoc {
            status: "certified_absent".into(),
            unit: None,
            inverse: None,
        },
        InnerSearch::NotFound => InnerDoc {
            status: "not_found".into(),
            unit: None,
            inverse: None,
        },
    };
    let symmetrized_kappa = if want_symmetrize {
        match symmetrize(a, &pairing) {
            Ok(Some(k)) => Some(format::kappa_block(&k)),
            Ok(None) => None,
            Err(err) => return error_output("nakayama", "axiom_failure", err.to_string(), 1),
        }
    } else {
        None
    };

    let doc = NakayamaDoc {
        schema_version: SCHEMA_VERSION,
        command: "nakayama".into(),
        seed,
        input: path.display().to_string(),
        passed: true,
        nakayama_matrix: format::matrix_block(rpt.naka.matrix()),
        is_identity: rpt.is_identity,
        is_algebra_morphism: rpt.is_algebra_morphism,
        inner,
        symmetrized_kappa,
    };
    Output {
        payload: render_nakayama(&doc, fmt),
        summary: format!(
            "nakayama {}: identity={} inner={}",
            path.display(),
            doc.is_identity,
            doc.inner.status
        ),
        exit: 0,
    }
}

fn render_nakayama(doc: &NakayamaDoc, fmt: Format) -> String {
    match fmt {
        Format::Json => report::to_json(doc),
        Format::Text => {
            let mut text = format!("nakayama {} (seed {})\n", doc.input, doc.seed);
            let _ = writeln!(text, "  identity:         {}", doc.is_identity);
            let _ = writeln!(text, "  algebra morphism: {}", doc.is_algebra_morphism);
            let _ = writeln!(text, "  inner:            {}", doc.inner.status);
            if let Some(k) = &doc.symmetrized_kappa {
                let _ = writeln!(text, "  symmetrized kappa: {} rows", k.len());
            }
            text
        }
    }
}

fn point_block(vec: &Mor) -> Vec<String> {
    vec.matrix().entries().iter().map(|s| s.to_string()).collect()
}

fn run_generate(kind: &GenerateKind) -> Output {
    let generated = match kind {
        GenerateKind::Matrix { n } => zoo::matrix_algebra(*n),
        GenerateKind::Group { cyclic, s3 } => match (cyclic, s3) {
            (Some(n), false) => {
                if *n == 0 {
                    Err(Error::BadParameter("cyclic group needs order ≥ 1".into()))
                } else {
                    zoo::group_algebra(&zoo::cyclic_table(*n))
                }
            }
            (None, true) => zoo::group_algebra(&zoo::s3_table()),
            _ => Err(Error::BadParameter(
                "choose exactly one of --cyclic N or --s3".into(),
            )),
        },
        GenerateKind::QuantumPlane { q } => match q.parse::<Scalar>() {
            Ok(q) => zoo::quantum_plane(&q),
            Err(err) => Err(err),
        },
        GenerateKind::CanonicalDual { dim } => {
            zoo::canonical_dual_frobenius(*dim).map(|d| d.generated)
        }
    };
    match generated {
        Ok(g) => Output {
            payload: format::emit(&format::from_generated(&g)),
            summary: format!("generate: {} (dim {})", g.name, g.algebra.dim()),
            exit: 0,
        },
        Err(err) => error_output("generate", "bad_parameter", err.to_string(), 2),
    }
}
