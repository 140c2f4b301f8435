use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use termflux::annotations::{read_log, AnnotationState};
use termflux::core::lowess::LowessParams;
use termflux::core::{ComplexTerm, Corpus, Language, Occurrence};
use termflux::manifest::{corpus_to_manifest, load_manifest, load_terms, resolve_data_path};
use termflux::pipeline::{self, families, scan_corpus};
use termflux::report::{json_bytes, jsonl_bytes, read_occurrences, write_output, Format};
use termflux::service::{self, AppState, DEFAULT_N};
use termflux::{Error, Result};

/// Reduced variants of complex terms: scanning, statistics and validation.
#[derive(Debug, Parser)]
#[command(name = "termflux", version)]
struct Cli {
    /// Accepted for interface stability; every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find full and reduced occurrences; writes JSON lines.
    Scan {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Anaphora and cataphora statistics per category.
    AnaStats {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Corpus-level RA and RCA.
        #[arg(long)]
        presence_out: Option<PathBuf>,
        /// Per-document FP and ANA densities with the LOWESS fit.
        #[arg(long)]
        lowess_out: Option<PathBuf>,
        #[arg(long, default_value_t = LowessParams::default().fraction)]
        lowess_frac: f64,
    },
    /// Onset means and the chronological index per term.
    ChronoStats {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Number of earliest occurrences averaged per term.
        #[arg(long = "N", default_value_t = DEFAULT_N)]
        n: usize,
        /// Time densities of full and reduced occurrences.
        #[arg(long)]
        density_out: Option<PathBuf>,
    },
    /// Variant lattice of each term: nodes and edges with shape labels.
    Lattice {
        #[arg(long)]
        terms: PathBuf,
        #[arg(long)]
        language: Option<String>,
        #[arg(long)]
        expansion_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Reducibility judgments for reduced occurrences; writes JSON lines.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distinct admissible 3-complex terms and reduced forms attested.
    Census {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Annotation API on 127.0.0.1.
    Serve {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long = "N", default_value_t = DEFAULT_N)]
        n: usize,
        /// Static files to serve next to the API.
        #[arg(long)]
        ui: Option<PathBuf>,
    },
    /// Self-contained manifest with annotations applied.
    Export {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        annotations: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Corpus manifest (JSON).
    #[arg(long)]
    corpus: PathBuf,
    /// Term inventory; needed unless `--occurrences` is given.
    #[arg(long, required_unless_present = "occurrences")]
    terms: Option<PathBuf>,
    /// Occurrences from an earlier `scan`, instead of scanning again.
    #[arg(long)]
    occurrences: Option<PathBuf>,
    /// Annotation log (JSON lines).
    #[arg(long)]
    annotations: Option<PathBuf>,
    /// Language of inventory lines without `lang=`; defaults to the first
    /// document's.
    #[arg(long)]
    language: Option<String>,
    /// Also scan for forms that only arise by expansion.
    #[arg(long)]
    expansion_only: bool,
}

struct Loaded {
    corpus: Corpus,
    terms: Vec<ComplexTerm>,
    occurrences: Vec<Occurrence>,
    annotations: AnnotationState,
}

impl Input {
    fn language(&self, corpus: &Corpus) -> Language {
        match &self.language {
            Some(tag) => Language::from(tag.clone()),
            None => corpus.documents().first().map(|d| d.language.clone()).unwrap_or_default(),
        }
    }

    fn load(&self) -> Result<Loaded> {
        let base = load_manifest(&self.corpus)?;
        let terms = match &self.terms {
            Some(p) => load_terms(p, &self.language(&base))?,
            None => Vec::new(),
        };
        let annotations = match &self.annotations {
            Some(p) => AnnotationState::replay(&read_log(&resolve_data_path(p))?),
            None => AnnotationState::default(),
        };
        let occurrences = match &self.occurrences {
            Some(p) => read_occurrences(p)?,
            None => scan_corpus(&base, &families(&terms, self.expansion_only)),
        };
        Ok(Loaded { corpus: annotations.apply_to(&base), terms, occurrences, annotations })
    }
}

fn out(path: &Option<PathBuf>) -> Option<&Path> {
    path.as_deref()
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Scan { input, out: o } => {
            let l = input.load()?;
            write_output(out(&o), &jsonl_bytes(&l.occurrences)?)
        }
        Command::AnaStats { input, out: o, format, presence_out, lowess_out, lowess_frac } => {
            let l = input.load()?;
            let (report, docs) = pipeline::ana_report(&l.corpus, &l.occurrences, l.annotations.labels())?;
            let bytes = match format {
                Format::Csv => pipeline::ana_csv(&report.rows)?,
                Format::Json => json_bytes(&report)?,
            };
            write_output(out(&o), &bytes)?;
            if let Some(p) = presence_out {
                write_output(Some(&p), &pipeline::presence_csv(&l.corpus.id, &docs)?)?;
            }
            if let Some(p) = lowess_out {
                let params = LowessParams { fraction: lowess_frac, ..LowessParams::default() };
                write_output(Some(&p), &pipeline::lowess_csv(&docs, params)?)?;
            }
            Ok(())
        }
        Command::ChronoStats { input, out: o, format, n, density_out } => {
            if n == 0 {
                return Err(Error::Other("--N must be positive".into()));
            }
            let l = input.load()?;
            let labels = l.annotations.labels();
            let report = pipeline::chrono_report(&l.corpus, &l.occurrences, labels, n)?;
            let bytes = match format {
                Format::Csv => pipeline::chrono_csv(&report)?,
                Format::Json => json_bytes(&report)?,
            };
            write_output(out(&o), &bytes)?;
            if let Some(p) = density_out {
                write_output(Some(&p), &pipeline::density_csv(&l.corpus, &l.occurrences, labels)?)?;
            }
            Ok(())
        }
        Command::Lattice { terms, language, expansion_only, out: o, format } => {
            let language = language.map(Language::from).unwrap_or_default();
            let reports = pipeline::lattice_reports(&load_terms(&terms, &language)?, expansion_only)?;
            let bytes = match format {
                Format::Csv => pipeline::lattice_csv(&reports)?,
                Format::Json => json_bytes(&reports)?,
            };
            write_output(out(&o), &bytes)
        }
        Command::Classify { input, out: o } => {
            let l = input.load()?;
            let records = pipeline::judgments(&l.corpus, &l.occurrences, l.annotations.labels());
            write_output(out(&o), &jsonl_bytes(&records)?)
        }
        Command::Census { input, out: o } => {
            if input.terms.is_none() {
                return Err(Error::Other("census needs --terms".into()));
            }
            let l = input.load()?;
            let terms = pipeline::admissible_terms(&l.terms);
            let census = pipeline::census_of(&l.corpus, &terms, &l.occurrences);
            write_output(out(&o), &pipeline::census_csv(&l.corpus.id, &census)?)
        }
        Command::Serve { input, port, n, ui } => {
            if n == 0 {
                return Err(Error::Other("--N must be positive".into()));
            }
            let log = input.annotations.clone().ok_or_else(|| Error::Other("serve needs --annotations".into()))?;
            let terms_path = input.terms.clone().ok_or_else(|| Error::Other("serve needs --terms".into()))?;
            let corpus = load_manifest(&input.corpus)?;
            let terms = load_terms(&terms_path, &input.language(&corpus))?;
            let state = AppState::new(corpus, terms, input.expansion_only, n, &log)?;
            let runtime =
                tokio::runtime::Runtime::new().map_err(|source| Error::Io { path: "<runtime>".into(), source })?;
            runtime.block_on(service::serve(Arc::new(state), port, ui))
        }
        Command::Export { corpus, annotations, out: o } => {
            let base = load_manifest(&corpus)?;
            let state = match annotations {
                Some(p) => AnnotationState::replay(&read_log(&resolve_data_path(&p))?),
                None => AnnotationState::default(),
            };
            write_output(out(&o), &json_bytes(&corpus_to_manifest(&state.apply_to(&base)))?)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("termflux: {e}");
            ExitCode::FAILURE
        }
    }
}
