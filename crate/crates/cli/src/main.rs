use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use nijenhuis::format::{render_pair_with, render_scalar};
use nijenhuis::{
    identity_sum, render_element_with, run_axiom_suite, stuffle_u, BaseKind, EndoHandle, Evaluator,
    HopfLayer, OutputMode, Rational, RenderStyle, ShuffleAlgebra, ShuffleElement, SuiteConfig,
    Weight,
};

/// Exact arithmetic in free commutative Nijenhuis algebras.
///
/// Elements are written as sums of tensor words, e.g. `2*x^2|1|x - 1/3*x`,
/// or `u<n>` for `1|1|...|1` on the trivial base. Operands of the algebra
/// commands may also be full expressions such as `dr(x, pr(x))`.
#[derive(Parser)]
#[command(name = "nijenhuis", version)]
struct Cli {
    /// Base algebra: trivial, onesided or binomial.
    #[arg(long, global = true, default_value = "trivial")]
    base: BaseKind,

    /// Compute the antipode even where the grading condition fails.
    #[arg(long, global = true)]
    allow_inadmissible: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product a ⋄ b.
    Mul { a: String, b: String },
    /// The Nijenhuis operator P(a) = 1|a.
    Pr { a: String },
    /// The coproduct Δ(a).
    Coprod { a: String },
    /// The counit ε(a).
    Counit { a: String },
    /// The right antipode S(a).
    Antipode { a: String },
    /// The convolution (f ∗ g)(a), by default id ∗ S.
    Conv {
        a: String,
        /// Left factor: id, S, e or Sb.
        #[arg(long, default_value = "id")]
        f: EndoHandle,
        /// Right factor: id, S, e or Sb.
        #[arg(long, default_value = "S")]
        g: EndoHandle,
    },
    /// The weight-λ stuffle product u_m ⋄_λ u_n (trivial base).
    Stuffle {
        m: usize,
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: Rational,
    },
    /// Table of Σ_k (−1)^k C(m+n−k, m) C(m, k) for 0 ≤ m, n ≤ max.
    IdentityTable {
        #[arg(long, default_value_t = 8)]
        max: u64,
    },
    /// Evaluate an arbitrary expression.
    Eval { expr: String },
    /// Run the axiom suite. Exits with status 1 if the verdict is fail.
    Check {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        max_exp: u32,
        #[arg(long, default_value_t = 6)]
        max_u: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated axiom names; all axioms when omitted.
        #[arg(long, value_delimiter = ',')]
        axioms: Option<Vec<String>>,
        /// Emit the structured JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Write the report to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Session {
    base: BaseKind,
    allow_inadmissible: bool,
    style: RenderStyle,
}

impl Session {
    fn alg(&self) -> ShuffleAlgebra {
        ShuffleAlgebra::new(self.base)
    }

    fn element(&self, text: &str) -> Result<ShuffleElement> {
        let value = Evaluator::new(self.base, self.allow_inadmissible)
            .eval_str(text)
            .with_context(|| format!("in `{text}`"))?;
        value
            .into_element(0)
            .with_context(|| format!("in `{text}`"))
    }

    fn show(&self, e: &ShuffleElement) -> String {
        render_element_with(e, self.style)
    }

    fn hopf(&self) -> HopfLayer {
        HopfLayer::new(self.alg(), self.allow_inadmissible)
    }
}

fn run(cli: Cli) -> Result<bool> {
    let s = Session {
        base: cli.base,
        allow_inadmissible: cli.allow_inadmissible,
        style: if cli.base.has_monomials() {
            RenderStyle::Letters
        } else {
            RenderStyle::UWords
        },
    };
    let alg = s.alg();
    match cli.command {
        Command::Mul { a, b } => {
            println!("{}", s.show(&alg.mul(&s.element(&a)?, &s.element(&b)?)));
        }
        Command::Pr { a } => println!("{}", s.show(&alg.p_right(&s.element(&a)?))),
        Command::Coprod { a } => {
            println!(
                "{}",
                render_pair_with(&alg.coproduct(&s.element(&a)?), s.style)
            );
        }
        Command::Counit { a } => println!("{}", render_scalar(&alg.counit(&s.element(&a)?))),
        Command::Antipode { a } => println!("{}", s.show(&s.hopf().antipode(&s.element(&a)?)?)),
        Command::Conv { a, f, g } => {
            println!("{}", s.show(&s.hopf().convolve(f, g, &s.element(&a)?)?));
        }
        Command::Stuffle { m, n, lambda } => {
            println!("{}", s.show(&stuffle_u(s.base, m, n, &Weight(lambda))?));
        }
        Command::IdentityTable { max } => {
            let header: Vec<String> = (0..=max).map(|n| n.to_string()).collect();
            println!("m\\n {}", header.join(" "));
            for m in 0..=max {
                let row: Vec<String> = (0..=max).map(|n| identity_sum(m, n).to_string()).collect();
                println!("{m:>3} {}", row.join(" "));
            }
        }
        Command::Eval { expr } => {
            let value = Evaluator::new(s.base, s.allow_inadmissible)
                .eval_str(&expr)
                .with_context(|| format!("in `{expr}`"))?;
            println!("{}", value.render(s.style));
        }
        Command::Check {
            max_len,
            max_exp,
            max_u,
            trials,
            seed,
            axioms,
            json,
            out,
        } => {
            let cfg = SuiteConfig {
                base: s.base,
                max_len,
                max_exp,
                max_u,
                trials,
                seed,
                axioms,
                output: if json {
                    OutputMode::Structured
                } else {
                    OutputMode::Text
                },
                allow_inadmissible: s.allow_inadmissible,
            };
            let report = run_axiom_suite(&cfg)?;
            let mut text = report.render();
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match out {
                Some(path) => fs::write(&path, &text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
