//! Command-line front end: argument parsing, command dispatch and output.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::SearchParams;
use crate::error::{Error, Result};
use crate::glue::{
    bongartz_glued, cprime_invariants, glue_mgs, glue_stt, monotonicity_report, reduce, sweep_all_pairs, GlueOutcome,
    GluingContext,
};
use crate::golden::verify_tables;
use crate::io::{csv_table, hasse_dot, parse_document, text_table, Document, Table};
use crate::linalg::PrimeField;
use crate::rep::module_name;
use crate::tilt::{Catalog, Lattice, DEFAULT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "tilting",
    version,
    about = "Support τ-tilting modules and their gluing over triangular matrix algebras"
)]
pub struct Cli {
    /// Prime p of the ground field F_p.
    #[arg(long, global = true, default_value_t = 2)]
    pub field: u32,
    /// Seed for the randomized isomorphism and splitting searches.
    #[arg(long, global = true, default_value_t = SearchParams::default().seed)]
    pub seed: u64,
    /// Largest number of indecomposables before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Largest Hom-space scanned exhaustively during isomorphism tests.
    #[arg(long = "iso-cap", global = true, default_value_t = SearchParams::default().exhaustive_cap)]
    pub iso_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// List all support τ-tilting pairs.
    Stt { file: PathBuf },
    /// Hasse quiver of the torsion classes with brick labels.
    Hasse {
        file: PathBuf,
        /// Shorthand for `--format dot`.
        #[arg(long)]
        dot: bool,
    },
    /// Glue support τ-tilting pairs of B and C; all pairs unless `--x` and `--y` are given.
    Glue {
        file: PathBuf,
        #[arg(long, requires = "y")]
        x: Option<String>,
        #[arg(long, requires = "x")]
        y: Option<String>,
    },
    /// Pairs of A above (X, 0) and the matching pairs of C.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        x: String,
    },
    /// Maximal green sequences with their brick sequences.
    Mgs { file: PathBuf },
    /// Bongartz completion of (X, 0) for a τ-tilting B-module X.
    Bongartz {
        file: PathBuf,
        #[arg(long)]
        x: String,
    },
    /// Invariants of End(T)/<e> next to those of C.
    Cprime {
        file: PathBuf,
        #[arg(long)]
        x: String,
    },
    /// Recompute the built-in reference tables and diff them.
    VerifyTables,
}

/// Validated settings for one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub field: PrimeField,
    pub params: SearchParams,
    pub cap: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub command: Command,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let field = PrimeField::new(cli.field)?;
        if cli.cap == 0 || cli.iso_cap == 0 {
            return Err(Error::usage("caps must be positive"));
        }
        let params = SearchParams { seed: cli.seed, exhaustive_cap: cli.iso_cap, ..SearchParams::default() };
        let format = match cli.command {
            Command::Hasse { dot: true, .. } => Format::Dot,
            _ => cli.format,
        };
        Ok(RunConfig { field, params, cap: cli.cap, format, out: cli.out, command: cli.command })
    }

    fn metadata(&self) -> String {
        format!(
            "tilting field={} seed={} cap={} iso-cap={}",
            self.field.p(),
            self.params.seed,
            self.cap,
            self.params.exhaustive_cap
        )
    }
}

/// Text produced by a command and the exit status it asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: i32,
}

fn load(cfg: &RunConfig, file: &PathBuf) -> Result<Document> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::usage(format!("{}: {e}", file.display())))?;
    parse_document(&text, cfg.field, cfg.params, cfg.cap)
}

fn load_glued(cfg: &RunConfig, file: &PathBuf) -> Result<(Document, GluingContext)> {
    let doc = load(cfg, file)?;
    let glued =
        doc.glued.clone().ok_or_else(|| Error::usage("this command needs a file with [B], [C] and [M] sections"))?;
    let ctx = GluingContext::new(glued, cfg.cap)?;
    Ok((doc, ctx))
}

/// Node of `lattice` named by `wanted`: a module defined in the file, or
/// summand names joined by `⊕`, `+` or spaces (`0` for zero).
fn resolve(doc: &Document, lattice: &Lattice, wanted: &str) -> Result<usize> {
    let cat = lattice.catalog();
    let mut idx = match doc.module(wanted) {
        Some(m) => {
            cat.indices_of(&m.rep).map_err(|_| Error::usage(format!("module `{wanted}` lives over another algebra")))?
        }
        None => wanted
            .split(['⊕', '+', ' '])
            .filter(|s| !s.is_empty() && *s != "0")
            .map(|s| {
                (0..cat.len())
                    .find(|&i| cat.name(i) == s)
                    .ok_or_else(|| Error::usage(format!("no indecomposable named `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    idx.sort_unstable();
    idx.dedup();
    lattice
        .pairs()
        .iter()
        .position(|p| p.module == idx)
        .ok_or_else(|| Error::usage(format!("`{wanted}` is not a support τ-tilting module")))
}

fn names(cat: &Catalog, idx: &[usize]) -> String {
    if idx.is_empty() {
        return "0".into();
    }
    idx.iter().map(|&i| cat.name(i)).collect::<Vec<_>>().join(" ")
}

fn vertex_labels(cat: &Catalog, vs: &[usize]) -> String {
    let q = cat.algebra().quiver();
    vs.iter().map(|&v| q.label(v)).collect::<Vec<_>>().join(" ")
}

fn stt_table(l: &Lattice) -> Result<Table> {
    let cat = l.catalog();
    let mut t = Table::new(["node", "module", "excluded", "dims", "semibrick", "torsion class"]);
    for (n, p) in l.pairs().iter().enumerate() {
        let dims = cat.dims_of(&p.module).iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        t.push([
            n.to_string(),
            p.name(cat),
            vertex_labels(cat, &p.excluded),
            format!("({dims})"),
            names(cat, &l.semibrick_of(n)?),
            names(cat, &l.class(n).members),
        ]);
    }
    Ok(t)
}

fn hasse_table(l: &Lattice) -> Table {
    let cat = l.catalog();
    let mut t = Table::new(["from", "to", "label"]);
    for e in l.edges() {
        t.push([l.pair(e.from).name(cat), l.pair(e.to).name(cat), cat.name(e.label).to_string()]);
    }
    t
}

fn glue_row(ctx: &GluingContext, o: &GlueOutcome) -> Result<Vec<String>> {
    let (lb, lc, la) = (ctx.b(), ctx.c(), ctx.a());
    let ca = la.catalog();
    let approx = &o.approximation;
    Ok(vec![
        lb.pair(o.x).name(lb.catalog()),
        lc.pair(o.y).name(lc.catalog()),
        o.pair.name(ca),
        vertex_labels(ca, &o.pair.excluded),
        names(ca, &la.semibrick_of(o.node)?),
        names(ca, &o.torsion.members),
        format!("{} -> {}", module_name(&approx.source)?, module_name(&approx.target)?),
    ])
}

fn render(cfg: &RunConfig, t: &Table, footer: &[String]) -> Result<String> {
    let mut out = format!("# {}\n", cfg.metadata());
    match cfg.format {
        Format::Table => out.push_str(&text_table(t)),
        Format::Csv => out.push_str(&csv_table(t)?),
        Format::Dot => return Err(Error::usage("DOT output is only available for `hasse`")),
    }
    for f in footer {
        out.push_str(&format!("# {f}\n"));
    }
    Ok(out)
}

/// Runs one command.
pub fn run_command(cfg: &RunConfig) -> Result<Output> {
    let ok = |text: String| Ok(Output { text, status: 0 });
    match &cfg.command {
        Command::Stt { file } => {
            let doc = load(cfg, file)?;
            let l = Lattice::new(Catalog::new(&doc.algebra, cfg.cap)?)?;
            ok(render(cfg, &stt_table(&l)?, &[format!("{} support τ-tilting pairs", l.len())])?)
        }
        Command::Hasse { file, .. } => {
            let doc = load(cfg, file)?;
            let l = Lattice::new(Catalog::new(&doc.algebra, cfg.cap)?)?;
            if cfg.format == Format::Dot {
                return ok(hasse_dot(&l, &[cfg.metadata()]));
            }
            ok(render(cfg, &hasse_table(&l), &[format!("{} nodes, {} edges", l.len(), l.edges().len())])?)
        }
        Command::Glue { file, x, y } => {
            let (doc, ctx) = load_glued(cfg, file)?;
            let mut t = Table::new(["X", "Y", "glued", "excluded", "semibrick", "torsion class", "approximation"]);
            if let (Some(x), Some(y)) = (x, y) {
                let o = glue_stt(&ctx, resolve(&doc, ctx.b(), x)?, resolve(&doc, ctx.c(), y)?)?;
                t.rows.push(glue_row(&ctx, &o)?);
                return ok(render(cfg, &t, &[])?);
            }
            let all = sweep_all_pairs(&ctx)?;
            for o in &all {
                t.rows.push(glue_row(&ctx, o)?);
            }
            let m = monotonicity_report(&ctx, &all);
            let footer = [
                format!("{} glued of {} support τ-tilting A-modules", all.len(), ctx.a().len()),
                format!("monotone on {} comparable input pairs, {} violations", m.comparable_inputs, m.violations),
            ];
            ok(render(cfg, &t, &footer)?)
        }
        Command::Reduce { file, x } => {
            let (doc, ctx) = load_glued(cfg, file)?;
            let red = reduce(&ctx, resolve(&doc, ctx.b(), x)?)?;
            let (la, lc) = (ctx.a(), ctx.c());
            let mut t = Table::new(["A-pair", "C-pair"]);
            for (&n, &c) in red.interval.iter().zip(&red.forward) {
                t.push([la.pair(n).name(la.catalog()), lc.pair(c).name(lc.catalog())]);
            }
            ok(render(
                cfg,
                &t,
                &[format!("interval of {} pairs, order and Hasse arrows preserved", red.interval.len())],
            )?)
        }
        Command::Mgs { file } => {
            let doc = load(cfg, file)?;
            let mut t = Table::new(["kind", "length", "bricks", "path"]);
            let push = |t: &mut Table, kind: &str, l: &Lattice, labels: &[usize], chain: &[usize]| {
                let cat = l.catalog();
                let path: Vec<String> = chain.iter().rev().map(|&n| l.pair(n).name(cat)).collect();
                t.push([kind.to_string(), labels.len().to_string(), names(cat, labels), path.join(" > ")]);
            };
            if let Some(glued) = doc.glued.clone() {
                let ctx = GluingContext::new(glued, cfg.cap)?;
                for g in ctx.a().maximal_green_sequences() {
                    push(&mut t, "A", ctx.a(), &g.labels, &g.chain);
                }
                for alpha in ctx.b().maximal_green_sequences() {
                    for beta in ctx.c().maximal_green_sequences() {
                        let g = glue_mgs(&ctx, &alpha, &beta)?;
                        push(&mut t, "glued", ctx.a(), &g.labels, &g.chain);
                    }
                }
            } else {
                let l = Lattice::new(Catalog::new(&doc.algebra, cfg.cap)?)?;
                for g in l.maximal_green_sequences() {
                    push(&mut t, "A", &l, &g.labels, &g.chain);
                }
            }
            ok(render(cfg, &t, &[])?)
        }
        Command::Bongartz { file, x } => {
            let (doc, ctx) = load_glued(cfg, file)?;
            let xi = resolve(&doc, ctx.b(), x)?;
            let o = bongartz_glued(&ctx, xi)?;
            let mut t = Table::new(["X", "completion", "U"]);
            t.push([
                ctx.b().pair(xi).name(ctx.b().catalog()),
                o.pair.name(ctx.a().catalog()),
                module_name(&o.approximation.target)?,
            ]);
            ok(render(cfg, &t, &[])?)
        }
        Command::Cprime { file, x } => {
            let (doc, ctx) = load_glued(cfg, file)?;
            let r = cprime_invariants(&ctx, resolve(&doc, ctx.b(), x)?)?;
            let mut t = Table::new(["algebra", "dim", "simples", "radical dim"]);
            for (name, inv) in [("C'", r.cprime), ("C", r.c)] {
                t.push([
                    name.to_string(),
                    inv.dim.to_string(),
                    inv.num_simples.to_string(),
                    inv.radical_dim.to_string(),
                ]);
            }
            ok(render(cfg, &t, &[format!("End(T) has dimension {}", r.end_dim)])?)
        }
        Command::VerifyTables => {
            let report = verify_tables(cfg.field, cfg.params, cfg.cap)?;
            let mut text = format!("# {}\n", cfg.metadata());
            for line in report.lines() {
                text.push_str(&line);
                text.push('\n');
            }
            let failed = report.failures().count();
            text.push_str(&format!("# {} checks, {} failed\n", report.checks.len(), failed));
            let status = if failed == 0 { 0 } else { Error::TableMismatch(String::new()).exit_code() };
            Ok(Output { text, status })
        }
    }
}

/// Parses arguments, runs the command, writes the output and returns the
/// process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        let out = run_command(&cfg)?;
        match &cfg.out {
            Some(path) => {
                std::fs::write(path, &out.text).map_err(|e| Error::usage(format!("{}: {e}", path.display())))?
            }
            None => print!("{}", out.text),
        }
        Ok(out.status)
    });
    match result {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
