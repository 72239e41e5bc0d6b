//! The bundled example corpus. The same objects ship as files under `data/`;
//! `write_data` regenerates them.

use std::path::Path;

use crate::algebra::{
    cyclic_group_table, field_ext_algebra, group_extension, group_hopf, matrix_algebra,
    symmetric_group_table, upper_triangular_over_diagonal, Extension, HopfData,
};
use crate::error::Result;
use crate::field::FieldSpec;
use crate::io::{to_json, ExtensionJson, HopfJson};
use crate::simplicial::{incidence_extension, parse_complex};

pub const EXTENSIONS: &[&str] = &[
    "ut2-diag-gf5",
    "m2-gf5",
    "m2-gf7",
    "gf2-c2",
    "gf3-c2",
    "gf5-c3",
    "gf25-gf5",
    "m2-over-m2-gf5",
    "hollow-incidence-gf5",
    "gf7-s3-over-c2",
];

pub const HOPF: &[&str] = &["hopf-gf2-c2", "hopf-gf3-c2"];

/// Facet lists, one facet per line.
pub const COMPLEXES: &[(&str, &str)] = &[
    ("point", "# a single vertex\n0\n"),
    ("edge", "0 1\n"),
    ("two-points", "# two components\n0\n1\n"),
    ("hollow-triangle", "0 1\n1 2\n0 2\n"),
    ("filled-triangle", "0 1 2\n"),
];

fn gf(p: u64) -> FieldSpec {
    FieldSpec::new(p).expect("corpus primes are prime")
}

pub fn extension(name: &str) -> Option<Extension> {
    let e = match name {
        "ut2-diag-gf5" => upper_triangular_over_diagonal(gf(5), 2).ok()?,
        "m2-gf5" => Extension::over_ground(matrix_algebra(gf(5), 2)),
        "m2-gf7" => Extension::over_ground(matrix_algebra(gf(7), 2)),
        "gf2-c2" => group_extension(gf(2), &cyclic_group_table(2), &[0]).ok()?,
        "gf3-c2" => group_extension(gf(3), &cyclic_group_table(2), &[0]).ok()?,
        "gf5-c3" => group_extension(gf(5), &cyclic_group_table(3), &[0]).ok()?,
        "gf25-gf5" => Extension::over_ground(field_ext_algebra(gf(5), &[3, 0, 1]).ok()?),
        "m2-over-m2-gf5" => Extension::identity(matrix_algebra(gf(5), 2)),
        "hollow-incidence-gf5" => incidence_extension(
            &parse_complex(complex_text("hollow-triangle")?).ok()?,
            gf(5),
        )
        .ok()?,
        "gf7-s3-over-c2" => group_extension(gf(7), &symmetric_group_table(), &[0, 1]).ok()?,
        _ => return None,
    };
    Some(e)
}

pub fn hopf(name: &str) -> Option<HopfData> {
    match name {
        "hopf-gf2-c2" => group_hopf(gf(2), &cyclic_group_table(2)).ok(),
        "hopf-gf3-c2" => group_hopf(gf(3), &cyclic_group_table(2)).ok(),
        _ => None,
    }
}

pub fn complex_text(name: &str) -> Option<&'static str> {
    COMPLEXES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// `(relative path, contents)` for every corpus file.
pub fn data_files() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for name in EXTENSIONS {
        let e = extension(name).expect("corpus entries build");
        out.push((
            format!("extensions/{name}.json"),
            to_json(&ExtensionJson::from_extension(&e)),
        ));
    }
    for name in HOPF {
        let h = hopf(name).expect("corpus entries build");
        out.push((
            format!("hopf/{name}.json"),
            to_json(&HopfJson::from_hopf(&h)),
        ));
    }
    for (name, text) in COMPLEXES {
        out.push((format!("complexes/{name}.txt"), text.to_string()));
    }
    out
}

pub fn write_data(dir: &Path) -> Result<()> {
    for (rel, contents) in data_files() {
        let path = dir.join(rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(path, contents)?;
    }
    Ok(())
}

/// `crates/core/data` of this checkout.
pub fn data_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/data"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_extension, parse_hopf};

    #[test]
    fn every_entry_is_valid() {
        for name in EXTENSIONS {
            assert!(extension(name).unwrap().validate().passed(), "{name}");
        }
        for name in HOPF {
            assert!(hopf(name).unwrap().validate().passed(), "{name}");
        }
        for (name, text) in COMPLEXES {
            assert!(parse_complex(text).is_ok(), "{name}");
        }
    }

    /// Set `AMITSUR_WRITE_CORPUS=1` to regenerate the files.
    #[test]
    fn data_files_match_generators() {
        if std::env::var_os("AMITSUR_WRITE_CORPUS").is_some() {
            write_data(data_dir()).unwrap();
        }
        for (rel, contents) in data_files() {
            let on_disk = std::fs::read_to_string(data_dir().join(&rel)).unwrap_or_default();
            assert_eq!(on_disk, contents, "{rel} is stale");
        }
        for name in EXTENSIONS {
            let text = std::fs::read_to_string(data_dir().join(format!("extensions/{name}.json")))
                .unwrap();
            let e = parse_extension(&text).unwrap();
            assert_eq!(e.ambient(), extension(name).unwrap().ambient());
        }
        for name in HOPF {
            let text =
                std::fs::read_to_string(data_dir().join(format!("hopf/{name}.json"))).unwrap();
            assert_eq!(
                parse_hopf(&text).unwrap().coproduct(),
                hopf(name).unwrap().coproduct()
            );
        }
    }
}
