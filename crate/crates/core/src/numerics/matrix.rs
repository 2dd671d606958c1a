//! Row-major dense matrix over f64, with the binary/TSV serialization used
//! by every model file.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"PPMX";

/// On-disk element type. Values are held as f64 in memory either way; f32
/// storage halves model files at reduced precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DType {
    F32,
    F64,
}

impl DType {
    fn code(self) -> u8 {
        match self {
            DType::F32 => 1,
            DType::F64 => 2,
        }
    }

    fn from_code(code: u8) -> Result<Self> {
        match code {
            1 => Ok(DType::F32),
            2 => Ok(DType::F64),
            other => Err(Error::Model(format!("unknown matrix dtype code {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape {
                expected: format!("{rows}x{cols} = {} values", rows * cols),
                got: format!("{} values", data.len()),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn fill(&mut self, v: f64) {
        self.data.iter_mut().for_each(|x| *x = v);
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    /// y = self · x where x has `cols` entries; returns `rows` entries.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.cols);
        let mut y = vec![0.0; self.rows];
        for r in 0..self.rows {
            y[r] = dot(self.row(r), x);
        }
        y
    }

    /// y = selfᵀ · x where x has `rows` entries; returns `cols` entries.
    pub fn matvec_transpose(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.rows);
        let mut y = vec![0.0; self.cols];
        for r in 0..self.rows {
            let xr = x[r];
            if xr == 0.0 {
                continue;
            }
            axpy(xr, self.row(r), &mut y);
        }
        y
    }

    /// self += alpha · u vᵀ with u over rows and v over cols.
    pub fn add_outer(&mut self, alpha: f64, u: &[f64], v: &[f64]) {
        debug_assert_eq!(u.len(), self.rows);
        debug_assert_eq!(v.len(), self.cols);
        for r in 0..self.rows {
            let s = alpha * u[r];
            if s == 0.0 {
                continue;
            }
            axpy(s, v, self.row_mut(r));
        }
    }

    /// Total number of stored values; used by memory-accounting checks.
    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Binary layout: magic `PPMX`, rows u64 LE, cols u64 LE, dtype u8,
    /// then the row-major payload little-endian.
    pub fn write_binary<W: Write>(&self, w: &mut W, dtype: DType) -> std::io::Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&(self.rows as u64).to_le_bytes())?;
        w.write_all(&(self.cols as u64).to_le_bytes())?;
        w.write_all(&[dtype.code()])?;
        match dtype {
            DType::F64 => {
                for v in &self.data {
                    w.write_all(&v.to_le_bytes())?;
                }
            }
            DType::F32 => {
                for v in &self.data {
                    w.write_all(&(*v as f32).to_le_bytes())?;
                }
            }
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(r: &mut R) -> Result<Self> {
        let bad = |m: &str| Error::Model(format!("matrix payload: {m}"));
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic).map_err(|_| bad("truncated magic"))?;
        if &magic != MAGIC {
            return Err(bad("bad magic"));
        }
        let mut buf8 = [0u8; 8];
        r.read_exact(&mut buf8).map_err(|_| bad("truncated rows"))?;
        let rows = u64::from_le_bytes(buf8) as usize;
        r.read_exact(&mut buf8).map_err(|_| bad("truncated cols"))?;
        let cols = u64::from_le_bytes(buf8) as usize;
        let mut code = [0u8; 1];
        r.read_exact(&mut code).map_err(|_| bad("truncated dtype"))?;
        let dtype = DType::from_code(code[0])?;
        let n = rows
            .checked_mul(cols)
            .ok_or_else(|| bad("dimension overflow"))?;
        let mut data = Vec::with_capacity(n);
        match dtype {
            DType::F64 => {
                for _ in 0..n {
                    r.read_exact(&mut buf8).map_err(|_| bad("truncated payload"))?;
                    data.push(f64::from_le_bytes(buf8));
                }
            }
            DType::F32 => {
                let mut buf4 = [0u8; 4];
                for _ in 0..n {
                    r.read_exact(&mut buf4).map_err(|_| bad("truncated payload"))?;
                    data.push(f32::from_le_bytes(buf4) as f64);
                }
            }
        }
        Matrix::from_vec(rows, cols, data)
    }

    pub fn save(&self, path: &Path, dtype: DType) -> Result<()> {
        let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let mut w = std::io::BufWriter::new(file);
        self.write_binary(&mut w, dtype).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        let mut r = std::io::BufReader::new(file);
        Matrix::read_binary(&mut r)
    }

    /// Text export for inspection: one row per line, tab-separated values
    /// printed with Rust's round-trip-exact float formatting.
    pub fn write_tsv<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|v| format!("{v}")).collect();
            writeln!(w, "{}", line.join("\t"))?;
        }
        Ok(())
    }
}

/// Dot product of two equal-length slices.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// y += alpha · x.
pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}
