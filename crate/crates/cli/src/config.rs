//! Configuration loading and validation.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use neutrometric::axioms::ScaleGrid;
use neutrometric::space::{NmsSpace, Point, SpaceDescription, Universe};

use crate::output::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Flags shared by every subcommand.
#[derive(Debug, Args)]
pub struct CommonOpts {
    /// Path to a JSON space description.
    #[arg(long)]
    pub space: Option<PathBuf>,

    /// Inline JSON space description (alternative to --space).
    #[arg(long, value_name = "JSON")]
    pub space_json: Option<String>,

    /// Sample count for probes and checkers.
    #[arg(long, default_value_t = 10_000)]
    pub samples: u32,

    /// Seed for all pseudo-random sampling.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Scale grid, comma separated, strictly increasing.
    #[arg(long, value_delimiter = ',', default_value = "0.1,1,10")]
    pub lambda_grid: Vec<f64>,

    /// Radius grid, comma separated, values in (0,1).
    #[arg(long, value_delimiter = ',')]
    pub epsilon_grid: Vec<f64>,

    /// Tolerance for limit probes.
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,

    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl CommonOpts {
    pub fn load_space(&self) -> Result<(NmsSpace, SpaceDescription), CliError> {
        let text = match (&self.space, &self.space_json) {
            (Some(path), None) => read_file(path)?,
            (None, Some(inline)) => inline.clone(),
            (Some(_), Some(_)) => {
                return Err(CliError::usage(
                    "--space and --space-json are mutually exclusive",
                ))
            }
            (None, None) => {
                return Err(CliError::usage(
                    "a space is required: pass --space <file> or --space-json <json>",
                ))
            }
        };
        let desc = SpaceDescription::from_json(&text)
            .map_err(|e| CliError::usage(format!("invalid space description: {e}")))?;
        let space = desc
            .build()
            .map_err(|e| CliError::usage(format!("space construction failed: {e}")))?;
        Ok((space, desc))
    }

    pub fn scale_grid(&self) -> Result<ScaleGrid, CliError> {
        ScaleGrid::new(self.lambda_grid.clone())
            .map_err(|e| CliError::usage(format!("invalid --lambda-grid: {e}")))
    }

    pub fn epsilon_grid_or(&self, default: &[f64]) -> Result<Vec<f64>, CliError> {
        let grid = if self.epsilon_grid.is_empty() {
            default.to_vec()
        } else {
            self.epsilon_grid.clone()
        };
        for &e in &grid {
            if !(e > 0.0 && e < 1.0) {
                return Err(CliError::usage(format!(
                    "--epsilon-grid values must lie in (0,1), got {e}"
                )));
            }
        }
        Ok(grid)
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

/// Parse a point argument against the universe it must live in: labels as
/// raw strings, naturals as integers, vectors as JSON arrays (with a bare
/// number accepted in dimension one).
pub fn parse_point(universe: &Universe, raw: &str) -> Result<Point, CliError> {
    let trimmed = raw.trim();
    match universe {
        Universe::FiniteLabeled { .. } => {
            // Accept both bare labels and JSON strings.
            if let Ok(serde_json::Value::String(s)) = serde_json::from_str(trimmed) {
                Ok(Point::Label(s))
            } else {
                Ok(Point::Label(trimmed.to_owned()))
            }
        }
        Universe::Naturals { .. } => trimmed
            .parse::<u64>()
            .map(Point::Natural)
            .map_err(|_| CliError::usage(format!("expected a natural number, got '{raw}'"))),
        Universe::RealVector { dim, .. } => {
            if let Ok(coords) = serde_json::from_str::<Vec<f64>>(trimmed) {
                return Ok(Point::Vector(coords));
            }
            if *dim == 1 {
                if let Ok(x) = trimmed.parse::<f64>() {
                    return Ok(Point::vector1(x));
                }
            }
            Err(CliError::usage(format!(
                "expected a vector of {dim} coordinates (JSON array), got '{raw}'"
            )))
        }
    }
}

/// Parse a JSON array of points against the universe.
pub fn parse_points(universe: &Universe, raw: &str) -> Result<Vec<Point>, CliError> {
    let values: Vec<serde_json::Value> = serde_json::from_str(raw)
        .map_err(|e| CliError::usage(format!("expected a JSON array of points: {e}")))?;
    values
        .iter()
        .map(|v| parse_point(universe, &v.to_string()))
        .collect()
}
