/*
 * nmistego.h
 *
 * C interface of the nmistego reversible data hiding library.
 *
 * All functions returning nmis_status yield NMIS_OK (0) on success or a
 * nonzero code; nmis_last_error() then describes the failure. Objects are
 * opaque handles: images come back through nmis_image** out-parameters and
 * must be released with nmis_image_free(); byte and string buffers returned
 * by the library must be released with nmis_free(). All functions are
 * re-entrant and the error message is thread-local.
 */

#ifndef NMISTEGO_H
#define NMISTEGO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nmis_image nmis_image;

/* Status codes; the CLI uses the same numbers as exit codes. */
enum {
    NMIS_OK = 0,
    NMIS_ERROR = 1,             /* unexpected failure, bad arguments */
    NMIS_CAPACITY_EXCEEDED = 2, /* payload does not fit the cover */
    NMIS_CORRUPT_STREAM = 3,    /* stego data inconsistent with the scheme */
    NMIS_BAD_IMAGE = 4,         /* malformed image or unusable dimensions */
    NMIS_IO_ERROR = 5           /* file access or truncated data */
};
typedef int nmis_status;

typedef enum {
    NMIS_SCHEME_PROPOSED = 0, /* interpolation codec over anchor extrema */
    NMIS_SCHEME_JUNGYOO = 1   /* 2x2 block-difference baseline */
} nmis_scheme;

/* Message for the most recent failure on this thread; empty string after a
 * success. The pointer stays valid until the next library call. */
const char* nmis_last_error(void);

const char* nmis_version(void);

/* Frees any buffer the library handed out (PGM bytes, payloads, CSV text). */
void nmis_free(void* ptr);

/* ---- images ------------------------------------------------------------ */

/* Builds an image from row-major 8-bit samples (width * height of them). */
nmis_status nmis_image_create(uint32_t width, uint32_t height,
                              const uint8_t* samples, nmis_image** out);

/* Parses a binary PGM ("P5", maxval <= 255) from memory or from a file. */
nmis_status nmis_image_load_pgm(const uint8_t* bytes, size_t len, nmis_image** out);
nmis_status nmis_image_read_file(const char* path, nmis_image** out);

/* Serializes to canonical binary PGM. *bytes is nmis_free()-able. */
nmis_status nmis_image_save_pgm(const nmis_image* img, uint8_t** bytes, size_t* len);
nmis_status nmis_image_write_file(const nmis_image* img, const char* path);

uint32_t nmis_image_width(const nmis_image* img);
uint32_t nmis_image_height(const nmis_image* img);
/* Row-major samples; valid while the image handle lives. */
const uint8_t* nmis_image_samples(const nmis_image* img);

void nmis_image_free(nmis_image* img);

/* Even-coordinate subsampling to half size (dimensions must be >= 2). */
nmis_status nmis_downscale_half(const nmis_image* img, nmis_image** out);

/* Top-left sub-image. */
nmis_status nmis_crop(const nmis_image* img, uint32_t width, uint32_t height,
                      nmis_image** out);

/* Neighbour-mean upscaling of an M x N image to (2M-1) x (2N-1). */
nmis_status nmis_nmi_upscale(const nmis_image* original, nmis_image** out);

/* ---- embedding and extraction ------------------------------------------ */

/* Total embeddable bits of the cover interpolated from `original`. */
nmis_status nmis_capacity(const nmis_image* original, nmis_scheme scheme,
                          uint64_t* total_bits);

/* Embeds payload bytes with the self-delimiting framing (a 32-bit big-endian
 * payload-bit-count header precedes the data). Needs
 * 8 * payload_len + 32 <= capacity. On success *stego_out is a new image and
 * *total_bits_embedded (optional) counts header + payload bits. */
nmis_status nmis_embed_bytes(const nmis_image* original, nmis_scheme scheme,
                             const uint8_t* payload, size_t payload_len,
                             nmis_image** stego_out, uint64_t* total_bits_embedded);

/* Raw framing: embeds exactly the given bits ('0'/'1' characters, whitespace
 * ignored) with no header. Extraction then returns full per-pixel groups, so
 * only full-capacity streams round-trip exactly. */
nmis_status nmis_embed_bits(const nmis_image* original, nmis_scheme scheme,
                            const char* bits, size_t len, nmis_image** stego_out,
                            uint64_t* total_bits_embedded);

/* Recovers a payload embedded by nmis_embed_bytes. *payload is
 * nmis_free()-able (also NUL-terminated for convenience). */
nmis_status nmis_extract_bytes(const nmis_image* stego, nmis_scheme scheme,
                               uint8_t** payload, size_t* payload_len);

/* Raw-framing extraction: the full bit group of every embeddable pixel, as a
 * NUL-terminated '0'/'1' string. */
nmis_status nmis_extract_bits(const nmis_image* stego, nmis_scheme scheme,
                              char** bits, size_t* nbits);

/* Exact original image: the stego anchors at even coordinates, untouched by
 * either scheme. */
nmis_status nmis_recover_original(const nmis_image* stego, nmis_image** out);

/* ---- metrics ------------------------------------------------------------ */

nmis_status nmis_mse(const nmis_image* a, const nmis_image* b, double* out);
/* PSNR in dB with peak 255; +infinity for identical images. */
nmis_status nmis_psnr(const nmis_image* a, const nmis_image* b, double* out);
double nmis_bpp(uint64_t bits_embedded, const nmis_image* stego);
nmis_status nmis_gain_rate(double bpp_proposed, double bpp_baseline, double* out);

/* ---- benchmarking ------------------------------------------------------- */

/* Benchmarks every .pgm under corpus_dir with both schemes at full capacity
 * (seeded random payloads, or the bits of payload_file when non-NULL) and
 * renders two CSVs. Both are byte-deterministic for a given seed. Any of the
 * out-parameters may be NULL. *warnings is one skipped-image note per line. */
nmis_status nmis_bench_run(const char* corpus_dir, uint64_t seed,
                           const char* payload_file, char** report_csv,
                           char** gains_csv, double* mean_gain, char** warnings);

#ifdef __cplusplus
}
#endif

#endif /* NMISTEGO_H */
