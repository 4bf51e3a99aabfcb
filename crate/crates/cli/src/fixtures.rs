//! Reference bases and numerators, one file per parameter tuple.
//!
//! `<label>.basis.txt` holds one polynomial per line; `<label>.numerator.txt`
//! holds a single polynomial in `t`. Blank lines and lines starting with `#`
//! are ignored. The files shipped in `fixtures/` are compiled in; a directory
//! given at run time replaces them.

use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use pseudosym_core::hilbert::{parse_univariate, UnivariatePoly};
use pseudosym_core::text::parse_polynomial;
use pseudosym_core::{MonomialOrdering, Polynomial, PseudoSymmetricParams, NVARS};

use crate::failure::Failure;
use crate::params::tuple_label;

macro_rules! embed {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name)))),*]
    };
}

const EMBEDDED: &[(&str, &str)] = embed![
    "a21-8_a1-16_a2-20_a3-7_a4-2.basis.txt",
    "a21-8_a1-16_a2-20_a3-7_a4-2.numerator.txt",
    "a21-4_a1-22_a2-13_a3-5_a4-2.basis.txt",
    "a21-4_a1-22_a2-13_a3-5_a4-2.numerator.txt",
    "a21-10_a1-17_a2-25_a3-4_a4-2.basis.txt",
    "a21-10_a1-17_a2-25_a3-4_a4-2.numerator.txt",
    "a21-3_a1-13_a2-14_a3-6_a4-2.basis.txt",
    "a21-3_a1-13_a2-14_a3-6_a4-2.numerator.txt",
    "a21-2_a1-9_a2-5_a3-3_a4-3.basis.txt",
    "a21-8_a1-16_a2-11_a3-3_a4-5.basis.txt",
];

#[derive(Clone, Debug, Default)]
pub struct Fixtures {
    dir: Option<PathBuf>,
}

impl Fixtures {
    /// The compiled-in fixture set.
    pub fn embedded() -> Self {
        Fixtures { dir: None }
    }

    pub fn from_dir(dir: impl Into<PathBuf>) -> Self {
        Fixtures { dir: Some(dir.into()) }
    }

    fn read(&self, file: &str) -> Result<Option<String>, Failure> {
        match &self.dir {
            None => Ok(EMBEDDED.iter().find(|(n, _)| *n == file).map(|(_, body)| body.to_string())),
            Some(dir) => {
                let path = dir.join(file);
                match fs::read_to_string(&path) {
                    Ok(s) => Ok(Some(s)),
                    Err(e) if e.kind() == ErrorKind::NotFound => Ok(None),
                    Err(e) => Err(Failure::Invalid(format!("{}: {e}", path.display()))),
                }
            }
        }
    }

    pub fn basis(&self, p: &PseudoSymmetricParams) -> Result<Option<Vec<Polynomial>>, Failure> {
        let file = format!("{}.basis.txt", tuple_label(p));
        self.read(&file)?.map(|body| parse_basis(&body).map_err(|e| in_file(&file, e))).transpose()
    }

    pub fn numerator(&self, p: &PseudoSymmetricParams) -> Result<Option<UnivariatePoly>, Failure> {
        let file = format!("{}.numerator.txt", tuple_label(p));
        self.read(&file)?
            .map(|body| {
                let line = content_lines(&body).next().unwrap_or("");
                parse_univariate(line).map_err(|e| in_file(&file, e.into()))
            })
            .transpose()
    }

    /// Labels with at least one fixture file.
    pub fn labels(&self) -> Result<Vec<String>, Failure> {
        let mut names: Vec<String> = match &self.dir {
            None => EMBEDDED.iter().map(|(n, _)| n.to_string()).collect(),
            Some(dir) => list_dir(dir)?,
        };
        names.retain_mut(|n| match n.split_once('.') {
            Some((stem, _)) => {
                *n = stem.to_string();
                true
            }
            None => false,
        });
        names.sort();
        names.dedup();
        Ok(names)
    }
}

fn list_dir(dir: &Path) -> Result<Vec<String>, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::Invalid(format!("{}: {e}", dir.display())))?;
    Ok(entries.filter_map(|e| e.ok()?.file_name().into_string().ok()).collect())
}

fn in_file(file: &str, e: Failure) -> Failure {
    Failure::Invalid(format!("{file}: {e}"))
}

fn content_lines(body: &str) -> impl Iterator<Item = &str> {
    body.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a polynomial list, one per line, under the local ordering.
pub fn parse_basis(body: &str) -> Result<Vec<Polynomial>, Failure> {
    content_lines(body)
        .enumerate()
        .map(|(i, line)| {
            parse_polynomial(line, NVARS, MonomialOrdering::LocalDegRevLex)
                .map_err(|e| Failure::Invalid(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

/// Inverse of [`parse_basis`].
pub fn render_basis(polys: &[Polynomial]) -> String {
    polys.iter().map(|p| format!("{p}\n")).collect()
}
