use associahedra::dissect::{enumerate_classes, labeled_moduli_census, ClassRecord, CENSUS_LIMIT};
use associahedra::facecount::{faces as face_count, moduli_faces};
use associahedra::isotropy::{isotropy_group, kappa_from_isotropy, IsotropyDescriptor};
use associahedra::reference;
use associahedra::series::Bounds;
use associahedra::types::{type_face_count, type_signatures};
use associahedra::verify::{run_all, VerifyOptions};
use associahedra::{ClusterSeries, Error, Result};
use num_bigint::BigUint;
use serde_json::Value;

use crate::output::{big, num, text, Table};
use crate::Which;

fn codims(n: i64, k: Option<i64>) -> Vec<i64> {
    match k {
        Some(k) => vec![k],
        None => (0..=(n - 2).max(0)).collect(),
    }
}

pub fn faces(n: i64, k: Option<i64>) -> Result<Table> {
    let mut t = Table::new("faces", ["n", "k", "faces"]);
    for k in codims(n, k) {
        t.push(vec![Value::from(n), Value::from(k), big(face_count(n, k)?)]);
    }
    Ok(t)
}

pub fn types(n: i64, k: Option<i64>) -> Result<Table> {
    let mut t = Table::new("types", ["n", "k", "type", "factors", "faces"]);
    for k in codims(n, k).into_iter().rev() {
        for sig in type_signatures(n, k)? {
            t.push(vec![
                Value::from(n),
                Value::from(k),
                text(sig.to_string()),
                text(sig.factorization_label()),
                big(type_face_count(&sig)),
            ]);
        }
    }
    Ok(t)
}

fn class_row(r: &ClassRecord) -> Vec<Value> {
    vec![
        text(r.label()),
        num(r.n as u64),
        num(r.k as u64),
        num(r.i as u64),
        text(r.code.as_str()),
        num(r.kappa),
        text(r.signature.to_string()),
        text(r.representative.diagonal_list()),
    ]
}

const CLASS_COLUMNS: [&str; 8] = ["label", "n", "k", "i", "code", "kappa", "type", "diagonals"];

pub fn classes(n: usize, k: usize) -> Result<Table> {
    let mut t = Table::new("classes", CLASS_COLUMNS);
    for r in enumerate_classes(n, k)? {
        t.push(class_row(&r));
    }
    Ok(t)
}

pub struct AtlasEntry {
    pub record: ClassRecord,
    pub isotropy: IsotropyDescriptor,
    pub kappa_check: bool,
}

pub fn atlas(n: usize, k: Option<usize>) -> Result<Vec<AtlasEntry>> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=n.saturating_sub(3)).collect(),
    };
    let mut out = Vec::new();
    for k in ks {
        for record in enumerate_classes(n, k)? {
            let isotropy = isotropy_group(&record.representative);
            let kappa_check = kappa_from_isotropy(n, k, &isotropy)
                .is_ok_and(|q| q == BigUint::from(record.kappa));
            out.push(AtlasEntry {
                record,
                isotropy,
                kappa_check,
            });
        }
    }
    Ok(out)
}

fn isotropy_cells(e: &AtlasEntry) -> Vec<Value> {
    let g = &e.isotropy;
    vec![
        text(g.structure()),
        num(g.z2_count),
        g.dihedral_order.map_or(Value::Null, num),
        big(&g.order),
        Value::from(g.promoted_reflection),
        Value::from(e.kappa_check),
    ]
}

const ISOTROPY_COLUMNS: [&str; 6] = [
    "group",
    "z2Count",
    "dihedralOrder",
    "order",
    "promotedReflection",
    "kappaCheck",
];

pub fn atlas_table(entries: &[AtlasEntry]) -> Table {
    let mut t = Table::new(
        "atlas",
        CLASS_COLUMNS.iter().chain(&ISOTROPY_COLUMNS).copied(),
    );
    for e in entries {
        let mut row = class_row(&e.record);
        row.extend(isotropy_cells(e));
        t.push(row);
    }
    t
}

pub fn isotropy(n: usize, k: usize) -> Result<Table> {
    let mut t = Table::new(
        "isotropy",
        ["label", "kappa"].iter().chain(&ISOTROPY_COLUMNS).copied(),
    );
    for e in atlas(n, Some(k))? {
        let mut row = vec![text(e.record.label()), num(e.record.kappa)];
        row.extend(isotropy_cells(&e));
        t.push(row);
    }
    Ok(t)
}

pub fn moduli(n: i64, k: Option<i64>, census: bool) -> Result<Table> {
    let polygon = usize::try_from(n + 1).unwrap_or(0);
    if census && polygon > CENSUS_LIMIT {
        return Err(Error::Infeasible {
            what: "labeled census",
            n: n as usize,
            limit: CENSUS_LIMIT - 1,
        });
    }
    let mut columns = vec!["n", "k", "faces"];
    if census {
        columns.push("census");
    }
    let mut t = Table::new("moduli", columns);
    for k in codims(n, k) {
        let mut row = vec![Value::from(n), Value::from(k), big(moduli_faces(n, k)?)];
        if census {
            row.push(num(labeled_moduli_census(polygon, k as usize)?));
        }
        t.push(row);
    }
    Ok(t)
}

pub fn tables(which: Which) -> Result<Table> {
    let letter = match which {
        Which::A => 'a',
        Which::V => 'v',
        Which::B => 'b',
        Which::F => 'f',
        Which::Dissections => return type_table(),
    };
    let layout = reference::series_table(letter).expect("series letter");
    let width = layout.iter().map(|(_, row)| row.len()).max().unwrap_or(0);
    let series = ClusterSeries::compute(Bounds::default())?;
    let (name, s) = match which {
        Which::A => ("A", &series.a),
        Which::V => ("V", &series.v),
        Which::B => ("B", &series.b),
        _ => ("F", &series.f),
    };
    let columns = std::iter::once("n".to_string()).chain((1..=width).map(|m| m.to_string()));
    let mut t = Table::new("tables", columns);
    for &(n, _) in layout {
        let mut row = vec![num(n)];
        for m in 1..=width as u32 {
            let c = s.count(name, m, n)?;
            row.push(if c == 0.into() { Value::Null } else { big(c) });
        }
        t.push(row);
    }
    Ok(t)
}

fn type_table() -> Result<Table> {
    let mut t = Table::new("tables", ["polygon", "type", "faces"]);
    for sides in 5..=10i64 {
        for k in (0..=sides - 3).rev() {
            for sig in type_signatures(sides - 1, k)? {
                t.push(vec![
                    Value::from(sides),
                    text(sig.to_string()),
                    big(type_face_count(&sig)),
                ]);
            }
        }
    }
    Ok(t)
}

pub fn verify(max_size: usize) -> (Table, bool) {
    let opts = VerifyOptions {
        max_size,
        ..VerifyOptions::default()
    };
    let mut t = Table::new(
        "verify",
        ["id", "status", "title", "checks", "failures", "notes"],
    );
    let mut ok = true;
    for r in run_all(&opts) {
        eprintln!("{r}");
        ok &= r.passed();
        t.push(vec![
            num(r.id),
            text(if r.passed() { "pass" } else { "fail" }),
            text(r.title),
            num(r.checks as u64),
            text(r.failures.join("; ")),
            text(r.notes.join("; ")),
        ]);
    }
    (t, ok)
}
