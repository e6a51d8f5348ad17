//! Command implementations behind the `boxplus` binary.
//!
//! Exit code contract: 0 success, 2 parse error, 3 type/shape error,
//! 4 law failures, 1 anything else.

pub mod demo;
pub mod format;

use std::fs;
use std::path::Path;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::laws::{run_suite_with, LawConfig, LawReport, Mutation};
use crate::matcat::{self, MatMor};
use crate::twovect::{normalize, vcompose2};
use crate::{Mat, Rat};
use format::{load, render_value, FormatError, Value};

/// Command-level errors, mapped onto the exit code contract.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Io(String),
    #[error("law suite reported {0} failure(s)")]
    LawFailures(usize),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Format(e) => e.exit_code(),
            CliError::Io(_) | CliError::Internal(_) => 1,
            CliError::LawFailures(_) => 4,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

type CResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> CResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// `compose`: load a document, evaluate an expression over its names, and
/// print (or write) the result in the same format. With `normalize` set,
/// dimension-0 components are deleted from the result: directly for a
/// 1-morphism, by transporting along the deletion isomorphisms for a
/// 2-morphism.
pub fn cmd_compose(
    input: &Path,
    expr: &str,
    output: Option<&Path>,
    normalize_result: bool,
) -> CResult<String> {
    let env = load(&read(input)?)?;
    let parsed = format::parse_expr(expr)?;
    let mut value = format::eval(&parsed, &env)?;
    if normalize_result {
        value = match value {
            Value::One(f) => Value::One(normalize(&f).0),
            Value::Two(t) => {
                let (_, _, src_bwd) = normalize(t.src());
                let (_, tgt_fwd, _) = normalize(t.tgt());
                let inner = vcompose2(&t, &src_bwd)?;
                Value::Two(vcompose2(&tgt_fwd, &inner)?)
            }
            other => other,
        };
    }
    let rendered = render_value("result", &value);
    if let Some(path) = output {
        write_out(path, &rendered)?;
    }
    Ok(rendered)
}

/// `check-laws`: run the suite and render the report. The caller maps
/// nonzero failures onto exit code 4; the report is returned either way so
/// it can be printed first.
pub fn cmd_check_laws(
    cfg: &LawConfig,
    mutation: Mutation,
    output: Option<&Path>,
) -> CResult<(LawReport, String)> {
    let report = run_suite_with(cfg, mutation);
    let rendered = report.render(true);
    if let Some(path) = output {
        write_out(path, &rendered)?;
    }
    Ok((report, rendered))
}

/// `demo-example`: build, verify and render the worked example.
pub fn cmd_demo_example() -> CResult<String> {
    let ex = demo::run()?;
    Ok(demo::render(&ex))
}

/// `dnc-matmul`: random square multiplications at the given sizes, checking
/// the partitioned product against the direct one and reporting both wall
/// times. Correctness is asserted; speed is only reported.
pub fn cmd_dnc_matmul(sizes: &[usize], threshold: usize, seed: u64) -> CResult<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    out.push_str(&format!("threshold={threshold} seed={seed}\n"));
    for &size in sizes {
        let a = random_square(&mut rng, size);
        let b = random_square(&mut rng, size);
        let t0 = Instant::now();
        let direct = matcat::compose(&a, &b)?;
        let direct_ms = t0.elapsed().as_secs_f64() * 1e3;
        let t1 = Instant::now();
        let split = matcat::dnc_mul(&a, &b, threshold)?;
        let split_ms = t1.elapsed().as_secs_f64() * 1e3;
        if direct != split {
            return Err(CliError::Internal(format!(
                "partitioned product differs from the direct product at size {size}"
            )));
        }
        out.push_str(&format!(
            "size {size:>4}: direct {direct_ms:>10.2} ms   partitioned {split_ms:>10.2} ms   equal: yes\n"
        ));
    }
    Ok(out)
}

fn random_square(rng: &mut ChaCha8Rng, size: usize) -> MatMor<Rat> {
    use rand::Rng;
    MatMor::from_matrix(Mat::from_fn(size, size, |_, _| {
        crate::rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
    }))
}

/// Loads a law configuration from a TOML file; missing keys fall back to
/// the defaults, command-line flags override afterwards.
pub fn load_config(path: &Path) -> CResult<LawConfig> {
    let text = read(path)?;
    toml::from_str(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
