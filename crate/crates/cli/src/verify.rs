use clap::{Args, ValueEnum};
use hombrax_core::homlie::{hom_jacobi_residual, multiplicativity_residual, HomLieAlgebra};
use hombrax_core::hybe::{
    braid_relation_residuals, compatibility_residual, hybe_residual, twist, ybe_residual,
};
use hombrax_core::tensor::describe_column;
use hombrax_core::yd::{
    check_colinearity, check_linearity, yd_braiding, yd_condition_residual, YdModule,
};
use hombrax_core::{LinearMap, Scalar, TensorOp};

use crate::io::{parse_input, parse_matrix, read_json, CliError, Input, Output};
use crate::InputArg;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Compat,
    Ybe,
    Hybe,
    Braid,
    HomJacobi,
    Yd,
    /// Every identity that applies to the input.
    All,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: Identity,
    #[command(flatten)]
    pub input: InputArg,
    /// Twisting map as `row;row` of comma-separated scalars, e.g. `a,0;0,d`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Replace `B` by `α^{⊗2} ∘ B` before checking.
    #[arg(long)]
    pub twist: bool,
    /// Largest number of strands for the braid relations.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
}

/// PASS/FAIL lines and the overall verdict.
pub struct Report {
    ok: bool,
    lines: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self {
            ok: true,
            lines: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl FnOnce() -> String) {
        if pass {
            self.lines.push(format!("PASS {name}"));
        } else {
            self.ok = false;
            self.lines.push(format!("FAIL {name}: {}", detail()));
        }
    }

    /// PASS iff `residual` is zero; FAIL shows its first nonzero column.
    pub fn residual(&mut self, name: &str, residual: &TensorOp) {
        let first = residual.first_nonzero_column().map(|(c, _)| c);
        self.check(name, first.is_none(), || {
            format!(
                "residual column {}",
                describe_column(residual, first.expect("nonzero"))
            )
        });
    }

    pub fn emit(self, out: &mut Output) -> bool {
        for l in &self.lines {
            out.line(l);
        }
        self.ok
    }
}

fn vector_text(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(s, _)| !s.is_zero())
        .map(|(s, l)| format!("({s})·{l}"))
        .collect();
    terms.join(" + ")
}

pub fn pair_checks(
    r: &mut Report,
    b: &TensorOp,
    alpha: &LinearMap,
    which: Identity,
    n: usize,
) -> Result<(), CliError> {
    let compat = compatibility_residual(b, alpha)?;
    if matches!(which, Identity::Compat | Identity::All) {
        r.residual("compat", &compat);
    }
    if which == Identity::Ybe {
        r.residual("ybe", &ybe_residual(b)?);
    }
    if matches!(which, Identity::Hybe | Identity::All) {
        if compat.is_zero() {
            r.residual("hybe", &hybe_residual(b, alpha)?);
        } else {
            let c = compat.first_nonzero_column().expect("nonzero").0;
            r.check("hybe", false, || {
                format!(
                    "α⊗α does not commute with B; compatibility residual column {}",
                    describe_column(&compat, c)
                )
            });
        }
    }
    if matches!(which, Identity::Braid | Identity::All) {
        if n < 3 {
            return Err(CliError::usage(
                "--n must be at least 3 for braid relations",
            ));
        }
        for k in 3..=n {
            let residuals = braid_relation_residuals(b, alpha, k)?;
            let bad = residuals.iter().find(|x| !x.residual.is_zero());
            r.check(&format!("braid n={k}"), bad.is_none(), || {
                let x = bad.expect("failing relation");
                let c = x.residual.first_nonzero_column().expect("nonzero").0;
                format!(
                    "{}: residual column {}",
                    x.relation,
                    describe_column(&x.residual, c)
                )
            });
        }
    }
    Ok(())
}

pub fn algebra_checks(r: &mut Report, l: &HomLieAlgebra) {
    let labels = l.space().labels().to_vec();
    let mult = multiplicativity_residual(l.bracket(), l.alpha());
    let bad = mult.iter().find(|(_, v)| v.iter().any(|s| !s.is_zero()));
    r.check("multiplicativity", bad.is_none(), || {
        let ((i, j), v) = bad.expect("failing pair");
        format!(
            "α[{},{}] − [α{0},α{1}] = {}",
            labels[*i],
            labels[*j],
            vector_text(&labels, v)
        )
    });
    let jac = hom_jacobi_residual(l);
    let bad = jac.iter().find(|(_, v)| v.iter().any(|s| !s.is_zero()));
    r.check("hom-jacobi", bad.is_none(), || {
        let ((x, y, z), v) = bad.expect("failing triple");
        format!(
            "triple ({},{},{}) gives {}",
            labels[*x],
            labels[*y],
            labels[*z],
            vector_text(&labels, v)
        )
    });
}

pub fn yd_checks(r: &mut Report, v: &YdModule, alpha: Option<&LinearMap>) -> Result<(), CliError> {
    let host = v.host().check();
    r.check("bialgebra", host.is_ok(), || {
        host.clone().unwrap_err().to_string()
    });
    let m = v.module().check();
    r.check("module", m.is_ok(), || m.clone().unwrap_err().to_string());
    let c = v.comodule().check();
    r.check("comodule", c.is_ok(), || c.clone().unwrap_err().to_string());
    if host.is_err() || m.is_err() || c.is_err() {
        return Ok(());
    }
    let defects = yd_condition_residual(v)?;
    r.check("yd", defects.is_empty(), || {
        let d = &defects[0];
        format!(
            "x = {}, v = {}: {} entries of the H⊗V residual are nonzero",
            v.host().space().labels()[d.x],
            v.space().labels()[d.v],
            d.residual.iter().filter(|s| !s.is_zero()).count()
        )
    });
    if !defects.is_empty() {
        return Ok(());
    }
    let b = yd_braiding(v)?;
    r.residual("ybe", &ybe_residual(&b)?);
    if let Some(a) = alpha {
        let col = check_colinearity(a, v.comodule());
        let lin = check_linearity(a, v.module(), v.host());
        r.check("colinearity", col, || "ρ∘α ≠ (Id⊗α)∘ρ".into());
        r.check("linearity", lin, || "α(x·v) ≠ x·α(v)".into());
        if compatibility_residual(&b, a)?.is_zero() {
            r.residual("hybe", &hybe_residual(&b, a)?);
        } else {
            r.check("hybe", false, || {
                "α⊗α does not commute with the braiding".into()
            });
        }
    }
    Ok(())
}

pub fn run(args: VerifyArgs, out: &mut Output) -> Result<bool, CliError> {
    let input = parse_input(&read_json(&args.input)?)?;
    let mut r = Report::new();
    let alpha_for = |b: &TensorOp| {
        args.alpha
            .as_deref()
            .map(|t| parse_matrix(t, b.space().clone()))
            .transpose()
    };
    match input {
        Input::Op(b) | Input::Pair(b, _)
            if args.identity == Identity::Ybe && args.alpha.is_none() =>
        {
            r.residual("ybe", &ybe_residual(&b)?);
        }
        Input::Op(b) => match alpha_for(&b)? {
            Some(a) => run_pair(&mut r, b, a, &args)?,
            None if args.identity == Identity::All => r.residual("ybe", &ybe_residual(&b)?),
            None => {
                return Err(CliError::usage(
                    "this check needs --alpha or a pair document",
                ))
            }
        },
        Input::Pair(b, a) => {
            let a = alpha_for(&b)?.unwrap_or(a);
            run_pair(&mut r, b, a, &args)?;
        }
        Input::Algebra(l) => match args.identity {
            Identity::HomJacobi | Identity::All => algebra_checks(&mut r, &l),
            _ => {
                return Err(CliError::usage(
                    "algebra documents support hom-jacobi and all",
                ))
            }
        },
        Input::Yd(v) => match args.identity {
            Identity::Yd | Identity::All => {
                let a = args
                    .alpha
                    .as_deref()
                    .map(|t| parse_matrix(t, v.space().clone()))
                    .transpose()?;
                yd_checks(&mut r, &v, a.as_ref())?;
            }
            _ => return Err(CliError::usage("YD module documents support yd and all")),
        },
    }
    Ok(r.emit(out))
}

fn run_pair(r: &mut Report, b: TensorOp, a: LinearMap, args: &VerifyArgs) -> Result<(), CliError> {
    if matches!(args.identity, Identity::HomJacobi | Identity::Yd) {
        return Err(CliError::usage(
            "operator documents support compat, ybe, hybe, braid and all",
        ));
    }
    let b = if args.twist {
        match twist(&b, &a) {
            Ok(t) => t,
            Err(e) => {
                r.check("twist", false, || e.to_string());
                return Ok(());
            }
        }
    } else {
        b
    };
    pair_checks(r, &b, &a, args.identity, args.n)
}
