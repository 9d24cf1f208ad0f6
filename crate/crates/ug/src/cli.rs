//! Command-line driver: argument shapes, dispatch, and exit codes.
//!
//! Exit code contract: 0 on success (including a holding check), 1
//! when a `check-*` verb reports a failing condition (the report is
//! still printed), 2 on file, parse, or flag errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use ultragraph::{
    base_dot, classify_primitivity, condition_k, condition_l, dual_dot,
    enumerate_admissible_pairs_bounded, extended_dot, pair_leq, quotient_dot, AdmissiblePair,
    DualGraph, ExtendedUltragraph, Fragment, IdealPoset, QuotientUltragraph, SatHereditary,
    Ultragraph, DEFAULT_VERTEX_BOUND,
};

use crate::flags;
use crate::parse;
use crate::report::{self, Rendered};

#[derive(Parser, Debug)]
#[command(
    name = "ug",
    version,
    about = "Analyze ultragraphs: quotients, Conditions (L) and (K), dual graphs, and ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit stable JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a .ug file and report its size.
    Validate { file: PathBuf },

    /// List vertices (with kinds) and edge classes.
    Info { file: PathBuf },

    /// Saturated hereditary closure of the seed vertices in --H.
    Closure {
        file: PathBuf,
        /// Seed vertices, comma separated.
        #[arg(long = "H", value_name = "NAMES")]
        h: String,
    },

    /// Breaking vertices of the saturated hereditary set --H.
    Breaking {
        file: PathBuf,
        /// Hereditary set vertices, comma separated.
        #[arg(long = "H", value_name = "NAMES")]
        h: String,
    },

    /// Enumerate all admissible pairs of the graph.
    Pairs {
        file: PathBuf,
        /// Cap on the vertex count the enumeration will accept.
        #[arg(long, value_name = "N")]
        max_vertices: Option<usize>,
    },

    /// Build the quotient by (--H, --B); with --K/--S, the quotient by
    /// that larger pair instead (it must lie above the context).
    Quotient {
        file: PathBuf,
        #[arg(long = "H", value_name = "NAMES")]
        h: String,
        #[arg(long = "B", value_name = "NAMES")]
        b: Option<String>,
        #[arg(long = "K", value_name = "NAMES")]
        k: Option<String>,
        #[arg(long = "S", value_name = "NAMES")]
        s: Option<String>,
        /// Also write the quotient as DOT to this path.
        #[arg(long = "dot", value_name = "PATH")]
        dot: Option<PathBuf>,
    },

    /// Condition (L) for the quotient by (--H, --B).
    CheckL {
        file: PathBuf,
        #[arg(long = "H", value_name = "NAMES")]
        h: String,
        #[arg(long = "B", value_name = "NAMES")]
        b: Option<String>,
    },

    /// Condition (K) for the graph relative to --H.
    CheckK {
        file: PathBuf,
        #[arg(long = "H", value_name = "NAMES")]
        h: String,
    },

    /// Dual graph of the fragment --F inside the quotient by (--H, --B).
    Dual {
        file: PathBuf,
        #[arg(long = "H", value_name = "NAMES")]
        h: String,
        #[arg(long = "B", value_name = "NAMES")]
        b: Option<String>,
        /// Fragment members: vertex classes (`w'`), edge families (`e`),
        /// or single copies (`e#2`), comma separated.
        #[arg(long = "F", value_name = "NAMES")]
        f: String,
        /// Also write the dual graph as DOT to this path.
        #[arg(long = "dot", value_name = "PATH")]
        dot: Option<PathBuf>,
    },

    /// The ideal poset at or above the context pair (--H, --B).
    Ideals {
        file: PathBuf,
        #[arg(long = "H", value_name = "NAMES")]
        h: Option<String>,
        #[arg(long = "B", value_name = "NAMES")]
        b: Option<String>,
        #[arg(long, value_name = "N")]
        max_vertices: Option<usize>,
    },

    /// Primitive ideals above the context pair; with --K/--S, classify
    /// that single pair instead.
    Primitive {
        file: PathBuf,
        #[arg(long = "H", value_name = "NAMES")]
        h: Option<String>,
        #[arg(long = "B", value_name = "NAMES")]
        b: Option<String>,
        #[arg(long = "K", value_name = "NAMES")]
        k: Option<String>,
        #[arg(long = "S", value_name = "NAMES")]
        s: Option<String>,
        #[arg(long, value_name = "N")]
        max_vertices: Option<usize>,
    },

    /// Full pipeline for one pair: breaking set, quotient, Conditions
    /// (L) and (K), directedness, exitless loops, poset, primitivity.
    Report {
        file: PathBuf,
        #[arg(long = "H", value_name = "NAMES")]
        h: Option<String>,
        #[arg(long = "B", value_name = "NAMES")]
        b: Option<String>,
        #[arg(long, value_name = "N")]
        max_vertices: Option<usize>,
    },

    /// DOT source for the graph; --H/--B select its quotient, --extended
    /// the extended graph, --F the dual graph of a fragment.
    Dot {
        file: PathBuf,
        #[arg(long = "H", value_name = "NAMES")]
        h: Option<String>,
        #[arg(long = "B", value_name = "NAMES")]
        b: Option<String>,
        #[arg(long = "F", value_name = "NAMES")]
        f: Option<String>,
        /// Render the extended graph instead of the quotient.
        #[arg(long)]
        extended: bool,
        /// Write the DOT source to this path as well.
        #[arg(long = "dot", value_name = "PATH")]
        dot: Option<PathBuf>,
    },
}

/// What a successfully dispatched command wants printed, and with
/// which exit code the process should finish.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn load(file: &Path) -> Result<Ultragraph, String> {
    let text = fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse::parse_ug(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn hereditary(g: &Ultragraph, value: &str) -> Result<SatHereditary, String> {
    let h1 = flags::vertex_list(g, "H", value).map_err(|e| e.to_string())?;
    SatHereditary::new(g, h1).map_err(|e| format!("--H: {e}"))
}

fn context_pair(
    g: &Ultragraph,
    h: Option<&str>,
    b: Option<&str>,
) -> Result<AdmissiblePair, String> {
    flags::admissible_pair(g, "H", h.unwrap_or(""), "B", b).map_err(|e| e.to_string())
}

fn target_pair(g: &Ultragraph, k: &str, s: Option<&str>) -> Result<AdmissiblePair, String> {
    flags::admissible_pair(g, "K", k, "S", s).map_err(|e| e.to_string())
}

fn build_poset(g: &Ultragraph, max_vertices: Option<usize>) -> Result<IdealPoset, String> {
    IdealPoset::with_bound(g, max_vertices.unwrap_or(DEFAULT_VERTEX_BOUND))
        .map_err(|e| e.to_string())
}

fn write_dot(path: &Path, source: &str) -> Result<(), String> {
    fs::write(path, source).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn finish(r: Rendered, json: bool, code: i32) -> Outcome {
    let stdout = if json { report::to_json_string(&r.json) } else { r.text };
    Outcome { stdout, code }
}

pub fn execute(cli: &Cli) -> Result<Outcome, String> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file } => {
            let g = load(file)?;
            Ok(finish(report::validate(&g), json, 0))
        }

        Command::Info { file } => {
            let g = load(file)?;
            Ok(finish(report::info(&g), json, 0))
        }

        Command::Closure { file, h } => {
            let g = load(file)?;
            let seeds = flags::vertex_list(&g, "H", h).map_err(|e| e.to_string())?;
            let closed = SatHereditary::closure(&g, &[seeds]);
            Ok(finish(report::closure(&g, seeds, &closed), json, 0))
        }

        Command::Breaking { file, h } => {
            let g = load(file)?;
            let h = hereditary(&g, h)?;
            Ok(finish(report::breaking(&g, &h), json, 0))
        }

        Command::Pairs { file, max_vertices } => {
            let g = load(file)?;
            let bound = max_vertices.unwrap_or(DEFAULT_VERTEX_BOUND);
            let list =
                enumerate_admissible_pairs_bounded(&g, bound).map_err(|e| e.to_string())?;
            Ok(finish(report::pairs(&g, &list), json, 0))
        }

        Command::Quotient { file, h, b, k, s, dot } => {
            let g = load(file)?;
            if s.is_some() && k.is_none() {
                return Err("--S requires --K".to_string());
            }
            let context = context_pair(&g, Some(h), b.as_deref())?;
            let pair = match k {
                None => context,
                Some(k) => {
                    let target = target_pair(&g, k, s.as_deref())?;
                    if !pair_leq(&context, &target) {
                        return Err(format!(
                            "--K: pair ({},{}) does not lie above the context ({},{})",
                            g.set_to_string(target.h1()),
                            g.set_to_string(target.breakers()),
                            g.set_to_string(context.h1()),
                            g.set_to_string(context.breakers()),
                        ));
                    }
                    target
                }
            };
            let q = QuotientUltragraph::new(&g, pair);
            if let Some(path) = dot {
                write_dot(path, &quotient_dot(&q))?;
            }
            Ok(finish(report::quotient(&q), json, 0))
        }

        Command::CheckL { file, h, b } => {
            let g = load(file)?;
            let pair = context_pair(&g, Some(h), b.as_deref())?;
            let q = QuotientUltragraph::new(&g, pair);
            let rep = condition_l(&q);
            let code = if rep.holds { 0 } else { 1 };
            Ok(finish(report::check_l(&q, &rep), json, code))
        }

        Command::CheckK { file, h } => {
            let g = load(file)?;
            let h = hereditary(&g, h)?;
            let rep = condition_k(&g, &h);
            let code = if rep.holds { 0 } else { 1 };
            Ok(finish(report::check_k(&g, &rep), json, code))
        }

        Command::Dual { file, h, b, f, dot } => {
            let g = load(file)?;
            let pair = context_pair(&g, Some(h), b.as_deref())?;
            let q = QuotientUltragraph::new(&g, pair);
            let names = flags::name_list(f);
            let fragment =
                Fragment::from_names(&q, &names).map_err(|e| format!("--F: {e}"))?;
            let dg = DualGraph::new(&q, &fragment);
            if let Some(path) = dot {
                write_dot(path, &dual_dot(&dg))?;
            }
            Ok(finish(report::dual(&q, &fragment, &dg), json, 0))
        }

        Command::Ideals { file, h, b, max_vertices } => {
            let g = load(file)?;
            let context = context_pair(&g, h.as_deref(), b.as_deref())?;
            let poset = build_poset(&g, *max_vertices)?;
            Ok(finish(report::ideals(&g, &poset, &context), json, 0))
        }

        Command::Primitive { file, h, b, k, s, max_vertices } => {
            let g = load(file)?;
            if s.is_some() && k.is_none() {
                return Err("--S requires --K".to_string());
            }
            let context = context_pair(&g, h.as_deref(), b.as_deref())?;
            match k {
                Some(k) => {
                    let target = target_pair(&g, k, s.as_deref())?;
                    if !pair_leq(&context, &target) {
                        return Err(
                            "--K: pair does not lie above the --H/--B context".to_string()
                        );
                    }
                    let verdict = classify_primitivity(&g, &target);
                    Ok(finish(report::primitive_single(&g, &target, &verdict), json, 0))
                }
                None => {
                    let poset = build_poset(&g, *max_vertices)?;
                    Ok(finish(report::primitive(&g, &poset, &context), json, 0))
                }
            }
        }

        Command::Report { file, h, b, max_vertices } => {
            let g = load(file)?;
            let pair = context_pair(&g, h.as_deref(), b.as_deref())?;
            let poset = build_poset(&g, *max_vertices)?;
            Ok(finish(report::report(&g, &pair, &poset), json, 0))
        }

        Command::Dot { file, h, b, f, extended, dot } => {
            let g = load(file)?;
            if *extended && f.is_some() {
                return Err("--extended and --F cannot be combined".to_string());
            }
            let source = if let Some(f) = f {
                let pair = context_pair(&g, h.as_deref(), b.as_deref())?;
                let q = QuotientUltragraph::new(&g, pair);
                let fragment = Fragment::from_names(&q, &flags::name_list(f))
                    .map_err(|e| format!("--F: {e}"))?;
                dual_dot(&DualGraph::new(&q, &fragment))
            } else if *extended {
                let pair = context_pair(&g, h.as_deref(), b.as_deref())?;
                extended_dot(&ExtendedUltragraph::new(&g, pair))
            } else if h.is_some() || b.is_some() {
                let pair = context_pair(&g, h.as_deref(), b.as_deref())?;
                quotient_dot(&QuotientUltragraph::new(&g, pair))
            } else {
                base_dot(&g)
            };
            if let Some(path) = dot {
                write_dot(path, &source)?;
            }
            Ok(finish(report::dot(source), json, 0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_parses_the_documented_invocations() {
        let cli = Cli::try_parse_from(["ug", "breaking", "ex1.ug", "--H", "v,a"]).unwrap();
        match &cli.command {
            Command::Breaking { h, .. } => assert_eq!(h, "v,a"),
            other => panic!("wrong command: {other:?}"),
        }

        let cli =
            Cli::try_parse_from(["ug", "check-k", "ex1.ug", "--H", "v,a", "--json"]).unwrap();
        assert!(cli.json);
        assert!(matches!(cli.command, Command::CheckK { .. }));

        let cli = Cli::try_parse_from([
            "ug", "dual", "ex1.ug", "--H", "v,a", "--F", "w',e,g",
        ])
        .unwrap();
        match &cli.command {
            Command::Dual { f, .. } => assert_eq!(f, "w',e,g"),
            other => panic!("wrong command: {other:?}"),
        }
    }

    #[test]
    fn missing_required_flags_are_arg_errors() {
        assert!(Cli::try_parse_from(["ug", "quotient", "ex1.ug"]).is_err());
        assert!(Cli::try_parse_from(["ug", "dual", "ex1.ug", "--H", "v,a"]).is_err());
        assert!(Cli::try_parse_from(["ug", "nonsense", "x.ug"]).is_err());
    }
}
