use clap::{Args, Subcommand};
use hombrax_core::braid::{reduced_word, tensor_power_solution, theta_operator, Permutation};
use hombrax_core::homlie::{scan_heisenberg, scan_sl2, scan_sl2_star, Classification};
use hombrax_core::quantum::{enumerate_patterns, group_by_shape, scan_compatible};
use hombrax_core::scalars::Rational;
use hombrax_core::yd::yd_braiding;
use hombrax_core::Result as CoreResult;

use crate::io::{
    op_json_labelled, pair_json, parse_input, parse_matrix, read_json, CliError, Input, Output,
};
use crate::verify::{yd_checks, Report};
use crate::InputArg;

#[derive(Args)]
pub struct FieldArg {
    /// An odd prime.
    #[arg(long)]
    pub field: u64,
}

#[derive(Subcommand)]
pub enum ClassifyTarget {
    /// Support patterns of the maps compatible with `B_{q,λ}`, grouped by shape.
    Compatible {
        #[arg(long)]
        dim: usize,
        /// Also scan every matrix over `F_p` and compare with the patterns.
        #[arg(long)]
        field: Option<u64>,
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        q: Rational,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: Rational,
    },
    /// Morphisms of sl(2) over `F_p`, sorted into families.
    Sl2(FieldArg),
    /// Morphisms of the Heisenberg algebra over `F_p`.
    Heisenberg(FieldArg),
    /// Morphisms of sl(2)* over `F_p`.
    Sl2star(FieldArg),
}

#[derive(Subcommand)]
pub enum BraidAction {
    /// `(B^{χ_nn}, α_n)` on `V^{⊗n}` from a pair document.
    Power {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        input: InputArg,
    },
    /// The operator `B^γ` for a permutation such as `3,4,1,2`.
    Eval {
        #[arg(long)]
        perm: Permutation,
        #[command(flatten)]
        input: InputArg,
    },
    /// Length and a reduced word of a permutation.
    Word {
        #[arg(long)]
        perm: Permutation,
    },
}

#[derive(Subcommand)]
pub enum YdAction {
    /// Check the module axioms, the YD condition and the braiding.
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// A map to check for linearity, colinearity and HYBE.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Emit the braiding `c(v⊗w) = v₋₁·w ⊗ v₀` as operator JSON.
    Braiding {
        #[command(flatten)]
        input: InputArg,
    },
}

fn report(c: CoreResult<Classification>, out: &mut Output) -> Result<bool, CliError> {
    let c = c?;
    out.line(c.to_string());
    for e in &c.unclassified_examples {
        out.line(format!("  unclassified example: {e:?}"));
    }
    Ok(c.unclassified == 0)
}

pub fn classify(target: ClassifyTarget, out: &mut Output) -> Result<bool, CliError> {
    match target {
        ClassifyTarget::Compatible {
            dim,
            field,
            q,
            lambda,
        } => {
            if !(1..=8).contains(&dim) {
                return Err(CliError::usage("--dim must be between 1 and 8"));
            }
            let groups = group_by_shape(dim);
            let total = enumerate_patterns(dim).len();
            out.line(format!("{total} patterns in {} shapes", groups.len()));
            for (shape, members) in &groups {
                out.line(format!("shape {shape}: {} patterns", members.len()));
                for m in members {
                    out.line(format!("  {m}"));
                }
            }
            let Some(p) = field else { return Ok(true) };
            let scan = scan_compatible(dim, p, &q, &lambda, None)?;
            let name = format!("oracle F_{p}");
            let mut r = Report::new();
            r.check(&name, scan.agrees(), || {
                format!(
                    "{} residual-only, {} pattern-only; first {:?}",
                    scan.residual_only,
                    scan.pattern_only,
                    scan.mismatches.first()
                )
            });
            out.line(format!(
                "{} matrices, {} compatible, {} pattern matches",
                scan.scanned, scan.residual_accepts, scan.pattern_accepts
            ));
            Ok(r.emit(out))
        }
        ClassifyTarget::Sl2(f) => report(scan_sl2(f.field), out),
        ClassifyTarget::Heisenberg(f) => report(scan_heisenberg(f.field), out),
        ClassifyTarget::Sl2star(f) => report(scan_sl2_star(f.field), out),
    }
}

fn pair_from(
    input: &InputArg,
) -> Result<(hombrax_core::TensorOp, hombrax_core::LinearMap), CliError> {
    match parse_input(&read_json(input)?)? {
        Input::Pair(b, a) => Ok((b, a)),
        Input::Op(b) if b.arity() == 2 => {
            let a = hombrax_core::LinearMap::identity(b.space().clone());
            Ok((b, a))
        }
        _ => Err(CliError::usage("expected an operator or a pair document")),
    }
}

pub fn braid(action: BraidAction, out: &mut Output) -> Result<bool, CliError> {
    match action {
        BraidAction::Power { n, input } => {
            let (b, a) = pair_from(&input)?;
            let (bn, an) = tensor_power_solution(&b, &a, n)?;
            out.json(&pair_json(&bn, &an));
        }
        BraidAction::Eval { perm, input } => {
            let (b, a) = pair_from(&input)?;
            out.json(&op_json_labelled(&theta_operator(&perm, &b, &a)?));
        }
        BraidAction::Word { perm } => {
            out.line(format!("length {}", perm.length()));
            out.line(reduced_word(&perm).to_string());
        }
    }
    Ok(true)
}

pub fn yd(action: YdAction, out: &mut Output) -> Result<bool, CliError> {
    match action {
        YdAction::Verify { input, alpha } => {
            let Input::Yd(v) = parse_input(&read_json(&input)?)? else {
                return Err(CliError::usage("expected a YD module document"));
            };
            let a = alpha
                .as_deref()
                .map(|t| parse_matrix(t, v.space().clone()))
                .transpose()?;
            let mut r = Report::new();
            yd_checks(&mut r, &v, a.as_ref())?;
            Ok(r.emit(out))
        }
        YdAction::Braiding { input } => {
            let Input::Yd(v) = parse_input(&read_json(&input)?)? else {
                return Err(CliError::usage("expected a YD module document"));
            };
            out.json(&op_json_labelled(&yd_braiding(&v)?));
            Ok(true)
        }
    }
}
