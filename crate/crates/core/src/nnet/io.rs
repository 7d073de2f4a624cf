//! Model file: magic, format version, JSON header, then every tensor as
//! little-endian f64 in row-major order.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Model, ModelConfig, NnetError, TrainParams};
use crate::Diagnostic;

const MAGIC: &[u8; 8] = b"BRMODEL\0";
pub const MODEL_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    config: ModelConfig,
    train_params: TrainParams,
    seed: u64,
    dictionary_hash: Option<String>,
    tensors: Vec<TensorInfo>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
struct TensorInfo {
    name: String,
    len: usize,
}

pub fn save_model_bytes(model: &Model) -> Vec<u8> {
    let header = Header {
        config: model.config.clone(),
        train_params: model.train_params.clone(),
        seed: model.seed,
        dictionary_hash: model.dictionary_hash.clone(),
        tensors: model
            .tensors()
            .iter()
            .map(|(name, t)| TensorInfo {
                name: name.to_string(),
                len: t.len(),
            })
            .collect(),
    };
    let json = serde_json::to_vec(&header).expect("header serializes");
    let mut out = Vec::with_capacity(16 + json.len() + model.parameter_count() * 8);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&MODEL_FORMAT_VERSION.to_le_bytes());
    out.extend_from_slice(&(json.len() as u32).to_le_bytes());
    out.extend_from_slice(&json);
    for (_, t) in model.tensors() {
        for v in t {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    out
}

pub fn save_model(model: &Model, path: &Path) -> Result<(), NnetError> {
    std::fs::write(path, save_model_bytes(model)).map_err(|source| NnetError::Io {
        path: path.display().to_string(),
        source,
    })
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize, what: &str) -> Result<&'a [u8], NnetError> {
        if self.bytes.len() - self.pos < n {
            return Err(format_err(
                self.pos,
                format!(
                    "truncated: need {n} bytes for {what}, {} left",
                    self.bytes.len() - self.pos
                ),
            ));
        }
        let s = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u32(&mut self, what: &str) -> Result<u32, NnetError> {
        Ok(u32::from_le_bytes(self.take(4, what)?.try_into().expect("4 bytes")))
    }
}

fn format_err(offset: usize, message: impl Into<String>) -> NnetError {
    NnetError::Format {
        offset: offset as u64,
        message: message.into(),
    }
}

/// Decode a model. When `expected_dictionary_hash` is given and differs
/// from the stored one, a warning diagnostic is returned with the model.
pub fn load_model_bytes(
    bytes: &[u8],
    expected_dictionary_hash: Option<&str>,
) -> Result<(Model, Vec<Diagnostic>), NnetError> {
    let mut cur = Cursor { bytes, pos: 0 };
    if cur.take(MAGIC.len(), "magic")? != MAGIC {
        return Err(format_err(0, "not a model file (bad magic)"));
    }
    let version = cur.u32("format version")?;
    if version != MODEL_FORMAT_VERSION {
        return Err(format_err(
            MAGIC.len(),
            format!("format version {version}, expected {MODEL_FORMAT_VERSION}"),
        ));
    }
    let header_len = cur.u32("header length")? as usize;
    let header_at = cur.pos;
    let header: Header = serde_json::from_slice(cur.take(header_len, "header")?)
        .map_err(|e| format_err(header_at, format!("bad header: {e}")))?;
    let mut model = Model::zeros(header.config).map_err(|e| format_err(header_at, e.to_string()))?;
    model.train_params = header.train_params;
    model.seed = header.seed;
    model.dictionary_hash = header.dictionary_hash;

    let expected: Vec<TensorInfo> = model
        .tensors()
        .iter()
        .map(|(name, t)| TensorInfo {
            name: name.to_string(),
            len: t.len(),
        })
        .collect();
    if header.tensors != expected {
        return Err(format_err(header_at, "tensor list does not match the configuration"));
    }
    for (info, tensor) in expected.iter().zip(model.tensors_mut()) {
        let raw = cur.take(tensor.len() * 8, &info.name)?;
        for (v, chunk) in tensor.iter_mut().zip(raw.chunks_exact(8)) {
            *v = f64::from_le_bytes(chunk.try_into().expect("8 bytes"));
        }
    }
    if cur.pos != bytes.len() {
        return Err(format_err(cur.pos, format!("{} trailing bytes", bytes.len() - cur.pos)));
    }

    let mut diagnostics = Vec::new();
    if let Some(want) = expected_dictionary_hash {
        if model.dictionary_hash.as_deref() != Some(want) {
            diagnostics.push(Diagnostic::new(
                "model",
                format!(
                    "dictionary hash mismatch: model has {}, dictionary is {want}",
                    model.dictionary_hash.as_deref().unwrap_or("none")
                ),
            ));
        }
    }
    Ok((model, diagnostics))
}

pub fn load_model(path: &Path, expected_dictionary_hash: Option<&str>) -> Result<(Model, Vec<Diagnostic>), NnetError> {
    let bytes = std::fs::read(path).map_err(|source| NnetError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_model_bytes(&bytes, expected_dictionary_hash)
}
