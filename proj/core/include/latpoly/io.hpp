#pragma once

#include <string>

#include "latpoly/chord.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/transform.hpp"

namespace latpoly {

// Chord text format:
//   m=<int>
//   arcs=(a,b),(c,d),...
// Diagnostics carry "line L, column C".
ChordDiagram parse_chord_text(const std::string& text);
std::string format_chord_text(const ChordDiagram& d);

// {"m": int, "arcs": [[a,b],...]}; a presentation {"m": int, "points": [[x,y],...]} is accepted too
ChordDiagram parse_chord_json(const std::string& text);
std::string format_chord_json(const ChordDiagram& d);
std::string format_presentation_json(const ChordDiagram& d);

// either chord format, chosen by the first non-blank character
ChordDiagram parse_chord(const std::string& text);

// {"ver0": [[x,y],...], "ver1": [[x,y],...]}, points sorted
LatticePolytope parse_polytope_json(const std::string& text);
std::string format_polytope_json(const LatticePolytope& p);

// {"initial", "terminal", "moves": [{"v","w","mirrored"}], "method", "cost", "signed_area"};
// loading replays the moves
TransformationSequence parse_sequence_json(const std::string& text);
std::string format_sequence_json(const TransformationSequence& s);

std::string format_arrangement_json(const Arrangement& a);

enum class FileKind { chord_text, chord_json, presentation, polytope, sequence };
FileKind detect_kind(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace latpoly
