#pragma once

// Scheme-dispatching convenience layer over the two codecs.

#include "nmistego/codec_jungyoo.hpp"
#include "nmistego/codec_proposed.hpp"

namespace nmistego {

inline CapacityMap compute_capacity(Scheme scheme, const GrayImage& original) {
    return scheme == Scheme::proposed ? proposed::compute_capacity(original)
                                      : jungyoo::compute_capacity(original);
}

inline EmbedResult embed(Scheme scheme, const GrayImage& original,
                         const BitString& payload,
                         Framing framing = Framing::with_header) {
    return scheme == Scheme::proposed ? proposed::embed(original, payload, framing)
                                      : jungyoo::embed(original, payload, framing);
}

inline BitString extract(Scheme scheme, const GrayImage& stego,
                         Framing framing = Framing::with_header) {
    return scheme == Scheme::proposed ? proposed::extract(stego, framing)
                                      : jungyoo::extract(stego, framing);
}

} // namespace nmistego
