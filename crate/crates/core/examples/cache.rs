//! Persists modified Macdonald polynomials to an on-disk cache and reloads them.

use qtsym::macdonald::MacCache;

fn main() {
    let dir = std::env::temp_dir().join("qtsym-example-cache");
    let cache = MacCache::open(&dir).unwrap();
    let computed = cache.warm(4).unwrap();
    println!("computed {computed} polynomials into {}", cache.dir().display());
    let loaded = cache.load().unwrap();
    println!("reloaded and validated {} entries", loaded.len());
    println!("a second warm computes {} more", cache.warm(4).unwrap());
}
