#ifndef DIS_CORPUS_HPP_
#define DIS_CORPUS_HPP_

#include <array>
#include <string_view>

// Reference societies and strings with known values, used by the CLI's
// corpus run and by the tests.
namespace dis::corpus {

// Four voters, pairwise-intersecting, approval number 3.
inline constexpr std::string_view kFourVoters =
    "+A+C+B-A+D-C+A-B-D+C+B-C+D-B-D-A";

// Eight voters with approval number 3, obtained by endpoint swaps from
// kEightVoterSource realized at width 2.
inline constexpr std::string_view kEightVoters =
    "+A+B+C-A+E-B+D-C+G-D+F-E+H-F+A-G\n"
    "+E-E+D-H+F-A+B-D+C-F+G-G+H-C-B-H";
inline constexpr std::string_view kEightVoterSource = "ABCDEFGHEADFCGBH";

struct Listing {
  int approval;
  int n;
  std::string_view rep;
};

// Societies found by endpoint-swap search, with their stated approval number.
inline constexpr std::array<Listing, 6> kSwapListings{{
    {3, 8,
     "+A+B+F-F+G-A+F-B+C-C+D-G+E-D+H-F+G-G+A-E+D-H\n"
     "+C-A+B-D+E-E+H-H-B-C"},
    {4, 12,
     "+A+B+C+F-C+H-B+L-L+G-G+I-F+D-A+C-H+L-D+E-E+J\n"
     "-I+G-J+K-C+B-L+I-I+D-K+E-G+J-B+F-D+K-F+A-A+H\n"
     "-K-E-H-J"},
    {5, 15,
     "+A+B+C+D+E-C+G-A+O-G+F-D+K-F+J-J+N-E+C-B+A-O\n"
     "+D-K+H-H+M-N+J-M+L-L+I-D+F-A+G-C+N-I+L-N+H-J\n"
     "+M-F+K-G+I-K+B-B+E-E+O-H-M-I-L-O"},
    {6, 18,
     "+A+B+C+D+E+G-A+M-C+K-G+Q-Q+P-P+O-O+J-D+F-E+A\n"
     "-B+C-F+P-K+I-I+R-M+O-R+H-H+L-J+Q-L+N-A+G-C+J\n"
     "-J+F-P+I-O+R-N+H-Q+L-G+D-F+N-D+K-K+B-B+E-R+M\n"
     "-N-M-E-H-L-I"},
    {7, 21,
     "+A+B+C+D+E+F+I-A+K-K+N-N+R-R+G-E+T-B+J-T+U-G\n"
     "+Q-D+B-I+P-Q+M-C+H-F+L-J+S-U+O-B+D-D+C-C+I-I\n"
     "+F-F+G-P+Q-M+R-L+J-S+N-O+K-H+A-G+E-J+T-Q+P-P\n"
     "+M-M+U-R+S-S+O-U+L-N+H-T-H-K-L-E-O-A"},
    {8, 24,
     "+A+B+C+D+E+F+G+L-G+N-C+O-F+Q-O+M-N+T-B+H-H+K\n"
     "-Q+I-I+U-U+X-D+J-L+F-A+O-E+C-J+G-M+P-T+U-P+H\n"
     "-K+W-X+I-W+R-R+V-V+S-O+Q-C+J-F+N-G+B-U+X-S+P\n"
     "-H+R-I+V-X+W-Q+K-B+D-J+T-N+S-D+L-T+M-K+A-L+E\n"
     "-P-A-W-S-E-M-V-R"},
}};

// Double-5 string of diameter 2.
inline constexpr std::string_view kFiveString = "ABCDEBECAD";

// Expected construct_thirteen(34), grouped by expanded seed symbol.
inline constexpr std::string_view kThirteen34 =
    "(1,2,3)(4,5,6)(7,8,9)(10,11,12)(13,14,15)(16,17,18)(19,20,21)(22,23,24)"
    "(25,26,27)(28,29,30)(1,2,3)(31,32,33)(16,17,18)(34)(13,14,15)(10,11,12)"
    "(19,20,21)(31,32,33)(28,29,30)(25,26,27)(4,5,6)(7,8,9)(34)(22,23,24)";

}  // namespace dis::corpus

#endif  // DIS_CORPUS_HPP_
