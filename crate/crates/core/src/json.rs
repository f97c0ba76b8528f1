//! JSON output. Complex numbers are `[re, im]`, matrices are row-major, and
//! every float is written with 17 significant digits.

use std::io::{self, Write};

use ndarray::Array2;
use serde::Serialize;
use serde_json::ser::Formatter;

use crate::circuit::{Gate, GateList};
use crate::clebsch_gordan::CgBlock;
use crate::schur::SchurUnitary;
use crate::C64;

/// Compact formatter that prints floats as `d.dddddddddddddddde±x`.
#[derive(Clone, Copy, Debug, Default)]
pub struct RoundTripFormatter;

impl Formatter for RoundTripFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes `value` with [`RoundTripFormatter`].
pub fn to_string<T: Serialize + ?Sized>(value: &T) -> serde_json::Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, RoundTripFormatter);
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

fn complex(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

fn matrix(m: &Array2<C64>) -> Vec<Vec<[f64; 2]>> {
    m.outer_iter().map(|r| r.iter().copied().map(complex).collect()).collect()
}

#[derive(Serialize)]
struct CgColJson {
    gz: String,
    i: usize,
}

#[derive(Serialize)]
struct CgRowJson {
    j: usize,
    lambda: String,
    gz: String,
}

#[derive(Serialize)]
pub struct CgBlockJson {
    lambda: String,
    d: usize,
    rows: Vec<CgRowJson>,
    cols: Vec<CgColJson>,
    matrix: Vec<Vec<[f64; 2]>>,
}

impl From<&CgBlock> for CgBlockJson {
    fn from(b: &CgBlock) -> Self {
        CgBlockJson {
            lambda: b.lambda.to_string(),
            d: b.d,
            rows: b
                .rows
                .iter()
                .map(|r| CgRowJson {
                    j: r.j,
                    lambda: r.pattern.top().to_string(),
                    gz: r.pattern.to_string(),
                })
                .collect(),
            cols: b
                .cols
                .iter()
                .map(|c| CgColJson {
                    gz: c.pattern.to_string(),
                    i: c.i,
                })
                .collect(),
            matrix: matrix(&b.matrix),
        }
    }
}

#[derive(Serialize)]
struct RowLabelJson {
    lambda: String,
    gz: String,
    path: String,
}

#[derive(Serialize)]
pub struct SchurJson {
    n: usize,
    d: usize,
    row_labels: Vec<RowLabelJson>,
    matrix: Vec<Vec<[f64; 2]>>,
}

impl From<&SchurUnitary> for SchurJson {
    fn from(s: &SchurUnitary) -> Self {
        SchurJson {
            n: s.n,
            d: s.d,
            row_labels: s
                .labels
                .iter()
                .map(|l| RowLabelJson {
                    lambda: l.lambda.to_string(),
                    gz: l.pattern.to_string(),
                    path: l.path.to_string(),
                })
                .collect(),
            matrix: matrix(&s.matrix),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind")]
enum GateJson {
    #[serde(rename = "rot")]
    Rot { a: usize, b: usize, block: [[[f64; 2]; 2]; 2] },
    #[serde(rename = "phase")]
    Phase { a: usize, value: [f64; 2] },
}

#[derive(Serialize)]
pub struct GateListJson {
    size: usize,
    gates: Vec<GateJson>,
}

impl From<&GateList> for GateListJson {
    fn from(g: &GateList) -> Self {
        GateListJson {
            size: g.size,
            gates: g
                .gates
                .iter()
                .map(|gate| match *gate {
                    Gate::Rot { a, b, block } => GateJson::Rot {
                        a,
                        b,
                        block: block.map(|row| row.map(complex)),
                    },
                    Gate::Phase { a, value } => GateJson::Phase {
                        a,
                        value: complex(value),
                    },
                })
                .collect(),
        }
    }
}

/// A real matrix as nested arrays.
pub fn real_matrix(m: &Array2<f64>) -> Vec<Vec<f64>> {
    m.outer_iter().map(|r| r.to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::two_level_decompose;
    use crate::clebsch_gordan::cg_block;
    use crate::schur::schur_unitary;

    #[test]
    fn floats_round_trip() {
        let values = [0.1, 1.0 / 3.0, -2.5e-300, 1e22, std::f64::consts::PI, 0.0];
        let text = to_string(&values).unwrap();
        let back: Vec<f64> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, values);
        assert!(text.contains("1.0000000000000000e22"));
    }

    #[test]
    fn schemas() {
        let s = schur_unitary(2, 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_string(&SchurJson::from(&s)).unwrap()).unwrap();
        assert_eq!(v["row_labels"].as_array().unwrap().len(), 4);
        assert_eq!(v["row_labels"][3]["lambda"], "1,1");
        assert_eq!(v["matrix"][0][0][0].as_f64(), Some(1.0));

        let b = cg_block(&"1".parse().unwrap(), 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_string(&CgBlockJson::from(&b)).unwrap()).unwrap();
        assert_eq!(v["lambda"], "1");
        assert_eq!(v["cols"].as_array().unwrap().len(), 4);

        let g = two_level_decompose(&s.matrix, 1e-12).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_string(&GateListJson::from(&g)).unwrap()).unwrap();
        assert_eq!(v["size"], 4);
        assert!(v["gates"].as_array().unwrap().iter().all(|g| g["kind"] == "rot" || g["kind"] == "phase"));
    }
}
