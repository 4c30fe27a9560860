use std::sync::Arc;

use clap::{Args, Subcommand, ValueEnum};
use hombrax_core::braid::tensor_power_solution;
use hombrax_core::homlie::{
    braiding_on_extension, extend_alpha, heisenberg, heisenberg_morphism, sl2, sl2_morphism,
    sl2_star, sl2_star_morphism, yau_twist, HomLieAlgebra,
};
use hombrax_core::hybe::twist;
use hombrax_core::quantum::{bql, phi};
use hombrax_core::scalars::rat;
use hombrax_core::yd::{
    comodule_from_qt, graded_comodule, graded_module, group_bialgebra, module_from_dqt,
    sign_bicharacter, sign_module, trivial_module, yd_braiding, z2_triangular, YdModule,
};
use hombrax_core::{Scalar, TensorOp};

use crate::io::{
    op_json_labelled, pair_json, parse_input, parse_list, parse_matrix, read_json, CliError, Input,
    Output,
};
use crate::{AlgebraName, InputArg};

#[derive(Subcommand)]
pub enum Target {
    /// The 4×4 R-matrix `Φ_{q,λ}`; with `--alpha`, the pair `(α^{⊗2}Φ, α)`.
    Phi {
        #[arg(long)]
        alpha: Option<String>,
    },
    /// `B_{q,λ}` on an N-dimensional space; with `--alpha`, the twisted pair.
    Bql {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// The Hom-Lie algebra `g_α` for a family member `α`.
    Homlie(AlgebraArgs),
    /// The pair `(B_α, α)` on `C ⊕ g_α`.
    Extension(AlgebraArgs),
    /// A Yetter-Drinfel'd module from the gallery.
    Yd(YdGallery),
    /// The braiding of a gallery Yetter-Drinfel'd module.
    YdBraiding(YdGallery),
    /// `(B^{χ_nn}, α_n)` from a pair on standard input.
    TensorPower {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Args)]
pub struct AlgebraArgs {
    #[arg(long, value_enum)]
    pub algebra: AlgebraName,
    /// Family index: sl2 takes 0..=3, sl2star 1 or 2; ignored for heisenberg.
    #[arg(long, default_value_t = 1)]
    pub kind: u8,
    /// Comma-separated scalar texts: heisenberg `a12,a13,a22,a23,a32,a33`;
    /// sl2star kind 1 `a21,a22,a23,a31,a32,a33`, kind 2 `a11,a21,a31`;
    /// sl2 `a,b,c`.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub params: String,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Gallery {
    /// `Z/2`-graded space: sign action, grading coaction.
    Graded,
    /// Trivial action and coaction over `k[Z/m]`.
    Trivial,
    /// Sign module made YD through `R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)`.
    Qt,
    /// Graded comodule made YD through the bicharacter `(-1)^{ij}`.
    Dqt,
}

#[derive(Args)]
pub struct YdGallery {
    #[arg(long, value_enum)]
    pub gallery: Gallery,
    /// Parities of the basis vectors (graded, qt, dqt).
    #[arg(long, default_value = "0,1")]
    pub parities: String,
    /// Order of the cyclic group (trivial).
    #[arg(long, default_value_t = 2)]
    pub group: usize,
    /// Dimension of the module (trivial).
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
}

pub fn homlie_from_args(a: &AlgebraArgs) -> Result<HomLieAlgebra, CliError> {
    let params: Vec<Scalar> = parse_list(&a.params, "parameter")?;
    match a.algebra {
        AlgebraName::Heisenberg => {
            let [a12, a13, a22, a23, a32, a33] = params.as_slice() else {
                return Err(CliError::usage("heisenberg takes six parameters"));
            };
            Ok(yau_twist(
                &heisenberg(),
                &heisenberg_morphism(a12, a13, a22, a23, a32, a33),
            )?)
        }
        AlgebraName::Sl2star => Ok(yau_twist(
            &sl2_star(),
            &sl2_star_morphism(a.kind, &params)?,
        )?),
        AlgebraName::Sl2 => {
            let rats = params
                .iter()
                .map(|s| {
                    s.as_rational()
                        .ok_or_else(|| CliError::usage("sl2 parameters must be rational"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let m = match (a.kind, rats.as_slice()) {
                (0, []) => sl2_morphism(0, &rat(0, 1), &rat(0, 1), &rat(0, 1))?,
                (_, [x, y, z]) => sl2_morphism(a.kind, x, y, z)?,
                _ => return Err(CliError::usage("sl2 takes three parameters a,b,c")),
            };
            Ok(yau_twist(&sl2(), &m)?)
        }
    }
}

pub fn yd_from_gallery(g: &YdGallery) -> Result<YdModule, CliError> {
    let parities = || parse_list::<usize>(&g.parities, "parity");
    Ok(match g.gallery {
        Gallery::Graded => graded_module(&parities()?)?,
        Gallery::Trivial => trivial_module(Arc::new(group_bialgebra(g.group)?), g.dim)?,
        Gallery::Qt => comodule_from_qt(&sign_module(&parities()?)?, &z2_triangular())?,
        Gallery::Dqt => module_from_dqt(&graded_comodule(&parities()?)?, &sign_bicharacter())?,
    })
}

fn with_alpha(b: TensorOp, alpha: Option<&str>, out: &mut Output) -> Result<(), CliError> {
    match alpha {
        None => out.json(&op_json_labelled(&b)),
        Some(text) => {
            let a = parse_matrix(text, b.space().clone())?;
            let t = twist(&b, &a)?;
            out.json(&pair_json(&t, &a));
        }
    }
    Ok(())
}

pub fn run(target: Target, out: &mut Output) -> Result<bool, CliError> {
    match target {
        Target::Phi { alpha } => with_alpha(phi(), alpha.as_deref(), out)?,
        Target::Bql { dim, alpha } => with_alpha(bql(dim)?, alpha.as_deref(), out)?,
        Target::Homlie(a) => out.json(&homlie_from_args(&a)?.to_json()),
        Target::Extension(a) => {
            let l = homlie_from_args(&a)?;
            out.json(&pair_json(&braiding_on_extension(&l)?, &extend_alpha(&l)));
        }
        Target::Yd(g) => out.json(&yd_from_gallery(&g)?.to_json()),
        Target::YdBraiding(g) => out.json(&op_json_labelled(&yd_braiding(&yd_from_gallery(&g)?)?)),
        Target::TensorPower { n, input } => {
            let Input::Pair(b, a) = parse_input(&read_json(&input)?)? else {
                return Err(CliError::usage(
                    "tensor-power needs a pair document with `b` and `alpha`",
                ));
            };
            let (bn, an) = tensor_power_solution(&b, &a, n)?;
            out.json(&pair_json(&bn, &an));
        }
    }
    Ok(true)
}
