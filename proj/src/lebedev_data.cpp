// Generated by tools/gen_lebedev.py from scipy.integrate.lebedev_rule.
// Rows are {x, y, z, w} on the unit sphere; weights sum to 1.
// Do not edit by hand.

#include "boltz/lebedev_data.hpp"

namespace boltz::detail {
namespace {
constexpr LebedevPoint kOrder5[] = {
    {1, 0, 0, 0.066666666666666666},
    {-1, 0, 0, 0.066666666666666666},
    {0, 1, 0, 0.066666666666666666},
    {0, -1, 0, 0.066666666666666666},
    {0, 0, 1, 0.066666666666666666},
    {0, 0, -1, 0.066666666666666666},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.074999999999999997},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.074999999999999997},
};
constexpr LebedevPoint kOrder7[] = {
    {1, 0, 0, 0.047619047619047623},
    {-1, 0, 0, 0.047619047619047623},
    {0, 1, 0, 0.047619047619047623},
    {0, -1, 0, 0.047619047619047623},
    {0, 0, 1, 0.047619047619047623},
    {0, 0, -1, 0.047619047619047623},
    {0, 0.70710678118654757, 0.70710678118654757, 0.038095238095238099},
    {0, -0.70710678118654757, 0.70710678118654757, 0.038095238095238099},
    {0, 0.70710678118654757, -0.70710678118654757, 0.038095238095238099},
    {0, -0.70710678118654757, -0.70710678118654757, 0.038095238095238099},
    {0.70710678118654757, 0, 0.70710678118654757, 0.038095238095238099},
    {0.70710678118654757, 0, -0.70710678118654757, 0.038095238095238099},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.038095238095238099},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.038095238095238099},
    {0.70710678118654757, 0.70710678118654757, 0, 0.038095238095238099},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.038095238095238099},
    {0.70710678118654757, -0.70710678118654757, 0, 0.038095238095238099},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.038095238095238099},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
};
constexpr LebedevPoint kOrder9[] = {
    {1, 0, 0, 0.0095238095238095247},
    {-1, 0, 0, 0.0095238095238095247},
    {0, 1, 0, 0.0095238095238095247},
    {0, -1, 0, 0.0095238095238095247},
    {0, 0, 1, 0.0095238095238095247},
    {0, 0, -1, 0.0095238095238095247},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.03214285714285714},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.03214285714285714},
    {0.4597008433809831, 0.88807383397711526, 0, 0.028571428571428571},
    {-0.4597008433809831, 0.88807383397711526, 0, 0.028571428571428571},
    {0.4597008433809831, -0.88807383397711526, 0, 0.028571428571428571},
    {-0.4597008433809831, -0.88807383397711526, 0, 0.028571428571428571},
    {0.88807383397711526, 0.4597008433809831, 0, 0.028571428571428571},
    {-0.88807383397711526, 0.4597008433809831, 0, 0.028571428571428571},
    {0.88807383397711526, -0.4597008433809831, 0, 0.028571428571428571},
    {-0.88807383397711526, -0.4597008433809831, 0, 0.028571428571428571},
    {0.4597008433809831, 0, 0.88807383397711526, 0.028571428571428571},
    {-0.4597008433809831, 0, 0.88807383397711526, 0.028571428571428571},
    {0.4597008433809831, 0, -0.88807383397711526, 0.028571428571428571},
    {-0.4597008433809831, 0, -0.88807383397711526, 0.028571428571428571},
    {0.88807383397711526, 0, 0.4597008433809831, 0.028571428571428571},
    {-0.88807383397711526, 0, 0.4597008433809831, 0.028571428571428571},
    {0.88807383397711526, 0, -0.4597008433809831, 0.028571428571428571},
    {-0.88807383397711526, 0, -0.4597008433809831, 0.028571428571428571},
    {0, 0.4597008433809831, 0.88807383397711526, 0.028571428571428571},
    {0, -0.4597008433809831, 0.88807383397711526, 0.028571428571428571},
    {0, 0.4597008433809831, -0.88807383397711526, 0.028571428571428571},
    {0, -0.4597008433809831, -0.88807383397711526, 0.028571428571428571},
    {0, 0.88807383397711526, 0.4597008433809831, 0.028571428571428571},
    {0, -0.88807383397711526, 0.4597008433809831, 0.028571428571428571},
    {0, 0.88807383397711526, -0.4597008433809831, 0.028571428571428571},
    {0, -0.88807383397711526, -0.4597008433809831, 0.028571428571428571},
};
constexpr LebedevPoint kOrder11[] = {
    {1, 0, 0, 0.0126984126984127},
    {-1, 0, 0, 0.0126984126984127},
    {0, 1, 0, 0.0126984126984127},
    {0, -1, 0, 0.0126984126984127},
    {0, 0, 1, 0.0126984126984127},
    {0, 0, -1, 0.0126984126984127},
    {0, 0.70710678118654757, 0.70710678118654757, 0.02257495590828924},
    {0, -0.70710678118654757, 0.70710678118654757, 0.02257495590828924},
    {0, 0.70710678118654757, -0.70710678118654757, 0.02257495590828924},
    {0, -0.70710678118654757, -0.70710678118654757, 0.02257495590828924},
    {0.70710678118654757, 0, 0.70710678118654757, 0.02257495590828924},
    {0.70710678118654757, 0, -0.70710678118654757, 0.02257495590828924},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.02257495590828924},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.02257495590828924},
    {0.70710678118654757, 0.70710678118654757, 0, 0.02257495590828924},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.02257495590828924},
    {0.70710678118654757, -0.70710678118654757, 0, 0.02257495590828924},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.02257495590828924},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.021093750000000001},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.021093750000000001},
    {0.30151134457776357, 0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, 0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {0.30151134457776357, -0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {0.30151134457776357, 0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, -0.30151134457776357, 0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, 0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {0.30151134457776357, -0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, -0.30151134457776357, -0.90453403373329089, 0.02017333553791887},
    {-0.30151134457776357, 0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, -0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, 0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {-0.30151134457776357, -0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {-0.30151134457776357, 0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, -0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {-0.30151134457776357, -0.90453403373329089, -0.30151134457776357, 0.02017333553791887},
    {0.30151134457776357, 0.90453403373329089, 0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, 0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, 0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, -0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, 0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, -0.30151134457776357, 0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, 0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
    {0.90453403373329089, -0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
    {-0.90453403373329089, -0.30151134457776357, -0.30151134457776357, 0.02017333553791887},
};
constexpr LebedevPoint kOrder17[] = {
    {1, 0, 0, 0.0038282704949371611},
    {-1, 0, 0, 0.0038282704949371611},
    {0, 1, 0, 0.0038282704949371611},
    {0, -1, 0, 0.0038282704949371611},
    {0, 0, 1, 0.0038282704949371611},
    {0, 0, -1, 0.0038282704949371611},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.009793737512487511},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.009793737512487511},
    {0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.0082117372831911097},
    {-0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {-0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {-0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {-0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.0082117372831911097},
    {0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {-0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.0082117372831911097},
    {0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.0099428148911781013},
    {-0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {-0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {-0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {-0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.0099428148911781013},
    {0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {-0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.0099428148911781013},
    {0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.0095954713360709605},
    {-0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {-0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {-0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {-0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.0095954713360709605},
    {0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {-0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.0095954713360709605},
    {0.47836902881215021, 0.87815891060406615, 0, 0.0096949963616630268},
    {-0.47836902881215021, 0.87815891060406615, 0, 0.0096949963616630268},
    {0.47836902881215021, -0.87815891060406615, 0, 0.0096949963616630268},
    {-0.47836902881215021, -0.87815891060406615, 0, 0.0096949963616630268},
    {0.87815891060406615, 0.47836902881215021, 0, 0.0096949963616630268},
    {-0.87815891060406615, 0.47836902881215021, 0, 0.0096949963616630268},
    {0.87815891060406615, -0.47836902881215021, 0, 0.0096949963616630268},
    {-0.87815891060406615, -0.47836902881215021, 0, 0.0096949963616630268},
    {0.47836902881215021, 0, 0.87815891060406615, 0.0096949963616630268},
    {-0.47836902881215021, 0, 0.87815891060406615, 0.0096949963616630268},
    {0.47836902881215021, 0, -0.87815891060406615, 0.0096949963616630268},
    {-0.47836902881215021, 0, -0.87815891060406615, 0.0096949963616630268},
    {0.87815891060406615, 0, 0.47836902881215021, 0.0096949963616630268},
    {-0.87815891060406615, 0, 0.47836902881215021, 0.0096949963616630268},
    {0.87815891060406615, 0, -0.47836902881215021, 0.0096949963616630268},
    {-0.87815891060406615, 0, -0.47836902881215021, 0.0096949963616630268},
    {0, 0.47836902881215021, 0.87815891060406615, 0.0096949963616630268},
    {0, -0.47836902881215021, 0.87815891060406615, 0.0096949963616630268},
    {0, 0.47836902881215021, -0.87815891060406615, 0.0096949963616630268},
    {0, -0.47836902881215021, -0.87815891060406615, 0.0096949963616630268},
    {0, 0.87815891060406615, 0.47836902881215021, 0.0096949963616630268},
    {0, -0.87815891060406615, 0.47836902881215021, 0.0096949963616630268},
    {0, 0.87815891060406615, -0.47836902881215021, 0.0096949963616630268},
    {0, -0.87815891060406615, -0.47836902881215021, 0.0096949963616630268},
};
constexpr LebedevPoint kOrder35[] = {
    {1, 0, 0, 0.00052658979682244358},
    {-1, 0, 0, 0.00052658979682244358},
    {0, 1, 0, 0.00052658979682244358},
    {0, -1, 0, 0.00052658979682244358},
    {0, 0, 1, 0.00052658979682244358},
    {0, 0, -1, 0.00052658979682244358},
    {0, 0.70710678118654757, 0.70710678118654757, 0.0025482199720026069},
    {0, -0.70710678118654757, 0.70710678118654757, 0.0025482199720026069},
    {0, 0.70710678118654757, -0.70710678118654757, 0.0025482199720026069},
    {0, -0.70710678118654757, -0.70710678118654757, 0.0025482199720026069},
    {0.70710678118654757, 0, 0.70710678118654757, 0.0025482199720026069},
    {0.70710678118654757, 0, -0.70710678118654757, 0.0025482199720026069},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.0025482199720026069},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.0025482199720026069},
    {0.70710678118654757, 0.70710678118654757, 0, 0.0025482199720026069},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.0025482199720026069},
    {0.70710678118654757, -0.70710678118654757, 0, 0.0025482199720026069},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.0025482199720026069},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.0025123174189273069},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.0025123174189273069},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.0025123174189273069},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.0025123174189273069},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.0025123174189273069},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.0025123174189273069},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.0025123174189273069},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.0025123174189273069},
    {0.69093463075091111, 0.69093463075091111, 0.21264682470755186, 0.0025304038011863552},
    {-0.69093463075091111, 0.69093463075091111, 0.21264682470755186, 0.0025304038011863552},
    {0.69093463075091111, -0.69093463075091111, 0.21264682470755186, 0.0025304038011863552},
    {0.69093463075091111, 0.69093463075091111, -0.21264682470755186, 0.0025304038011863552},
    {-0.69093463075091111, -0.69093463075091111, 0.21264682470755186, 0.0025304038011863552},
    {-0.69093463075091111, 0.69093463075091111, -0.21264682470755186, 0.0025304038011863552},
    {0.69093463075091111, -0.69093463075091111, -0.21264682470755186, 0.0025304038011863552},
    {-0.69093463075091111, -0.69093463075091111, -0.21264682470755186, 0.0025304038011863552},
    {-0.69093463075091111, 0.21264682470755186, 0.69093463075091111, 0.0025304038011863552},
    {0.69093463075091111, -0.21264682470755186, 0.69093463075091111, 0.0025304038011863552},
    {0.69093463075091111, 0.21264682470755186, -0.69093463075091111, 0.0025304038011863552},
    {-0.69093463075091111, -0.21264682470755186, 0.69093463075091111, 0.0025304038011863552},
    {-0.69093463075091111, 0.21264682470755186, -0.69093463075091111, 0.0025304038011863552},
    {0.69093463075091111, -0.21264682470755186, -0.69093463075091111, 0.0025304038011863552},
    {-0.69093463075091111, -0.21264682470755186, -0.69093463075091111, 0.0025304038011863552},
    {0.69093463075091111, 0.21264682470755186, 0.69093463075091111, 0.0025304038011863552},
    {0.21264682470755186, 0.69093463075091111, 0.69093463075091111, 0.0025304038011863552},
    {-0.21264682470755186, 0.69093463075091111, 0.69093463075091111, 0.0025304038011863552},
    {0.21264682470755186, -0.69093463075091111, 0.69093463075091111, 0.0025304038011863552},
    {0.21264682470755186, 0.69093463075091111, -0.69093463075091111, 0.0025304038011863552},
    {-0.21264682470755186, -0.69093463075091111, 0.69093463075091111, 0.0025304038011863552},
    {-0.21264682470755186, 0.69093463075091111, -0.69093463075091111, 0.0025304038011863552},
    {0.21264682470755186, -0.69093463075091111, -0.69093463075091111, 0.0025304038011863552},
    {-0.21264682470755186, -0.69093463075091111, -0.69093463075091111, 0.0025304038011863552},
    {0.17748360546091579, 0.17748360546091579, 0.96798715879147279, 0.0020142790209185281},
    {-0.17748360546091579, 0.17748360546091579, 0.96798715879147279, 0.0020142790209185281},
    {0.17748360546091579, -0.17748360546091579, 0.96798715879147279, 0.0020142790209185281},
    {0.17748360546091579, 0.17748360546091579, -0.96798715879147279, 0.0020142790209185281},
    {-0.17748360546091579, -0.17748360546091579, 0.96798715879147279, 0.0020142790209185281},
    {-0.17748360546091579, 0.17748360546091579, -0.96798715879147279, 0.0020142790209185281},
    {0.17748360546091579, -0.17748360546091579, -0.96798715879147279, 0.0020142790209185281},
    {-0.17748360546091579, -0.17748360546091579, -0.96798715879147279, 0.0020142790209185281},
    {-0.17748360546091579, 0.96798715879147279, 0.17748360546091579, 0.0020142790209185281},
    {0.17748360546091579, -0.96798715879147279, 0.17748360546091579, 0.0020142790209185281},
    {0.17748360546091579, 0.96798715879147279, -0.17748360546091579, 0.0020142790209185281},
    {-0.17748360546091579, -0.96798715879147279, 0.17748360546091579, 0.0020142790209185281},
    {-0.17748360546091579, 0.96798715879147279, -0.17748360546091579, 0.0020142790209185281},
    {0.17748360546091579, -0.96798715879147279, -0.17748360546091579, 0.0020142790209185281},
    {-0.17748360546091579, -0.96798715879147279, -0.17748360546091579, 0.0020142790209185281},
    {0.17748360546091579, 0.96798715879147279, 0.17748360546091579, 0.0020142790209185281},
    {0.96798715879147279, 0.17748360546091579, 0.17748360546091579, 0.0020142790209185281},
    {-0.96798715879147279, 0.17748360546091579, 0.17748360546091579, 0.0020142790209185281},
    {0.96798715879147279, -0.17748360546091579, 0.17748360546091579, 0.0020142790209185281},
    {0.96798715879147279, 0.17748360546091579, -0.17748360546091579, 0.0020142790209185281},
    {-0.96798715879147279, -0.17748360546091579, 0.17748360546091579, 0.0020142790209185281},
    {-0.96798715879147279, 0.17748360546091579, -0.17748360546091579, 0.0020142790209185281},
    {0.96798715879147279, -0.17748360546091579, -0.17748360546091579, 0.0020142790209185281},
    {-0.96798715879147279, -0.17748360546091579, -0.17748360546091579, 0.0020142790209185281},
    {0.4914342637784746, 0.4914342637784746, 0.71901650104084347, 0.0025017251684029355},
    {-0.4914342637784746, 0.4914342637784746, 0.71901650104084347, 0.0025017251684029355},
    {0.4914342637784746, -0.4914342637784746, 0.71901650104084347, 0.0025017251684029355},
    {0.4914342637784746, 0.4914342637784746, -0.71901650104084347, 0.0025017251684029355},
    {-0.4914342637784746, -0.4914342637784746, 0.71901650104084347, 0.0025017251684029355},
    {-0.4914342637784746, 0.4914342637784746, -0.71901650104084347, 0.0025017251684029355},
    {0.4914342637784746, -0.4914342637784746, -0.71901650104084347, 0.0025017251684029355},
    {-0.4914342637784746, -0.4914342637784746, -0.71901650104084347, 0.0025017251684029355},
    {-0.4914342637784746, 0.71901650104084347, 0.4914342637784746, 0.0025017251684029355},
    {0.4914342637784746, -0.71901650104084347, 0.4914342637784746, 0.0025017251684029355},
    {0.4914342637784746, 0.71901650104084347, -0.4914342637784746, 0.0025017251684029355},
    {-0.4914342637784746, -0.71901650104084347, 0.4914342637784746, 0.0025017251684029355},
    {-0.4914342637784746, 0.71901650104084347, -0.4914342637784746, 0.0025017251684029355},
    {0.4914342637784746, -0.71901650104084347, -0.4914342637784746, 0.0025017251684029355},
    {-0.4914342637784746, -0.71901650104084347, -0.4914342637784746, 0.0025017251684029355},
    {0.4914342637784746, 0.71901650104084347, 0.4914342637784746, 0.0025017251684029355},
    {0.71901650104084347, 0.4914342637784746, 0.4914342637784746, 0.0025017251684029355},
    {-0.71901650104084347, 0.4914342637784746, 0.4914342637784746, 0.0025017251684029355},
    {0.71901650104084347, -0.4914342637784746, 0.4914342637784746, 0.0025017251684029355},
    {0.71901650104084347, 0.4914342637784746, -0.4914342637784746, 0.0025017251684029355},
    {-0.71901650104084347, -0.4914342637784746, 0.4914342637784746, 0.0025017251684029355},
    {-0.71901650104084347, 0.4914342637784746, -0.4914342637784746, 0.0025017251684029355},
    {0.71901650104084347, -0.4914342637784746, -0.4914342637784746, 0.0025017251684029355},
    {-0.71901650104084347, -0.4914342637784746, -0.4914342637784746, 0.0025017251684029355},
    {0.64566647074242556, 0.64566647074242556, 0.40771266489776975, 0.0025132671745975639},
    {-0.64566647074242556, 0.64566647074242556, 0.40771266489776975, 0.0025132671745975639},
    {0.64566647074242556, -0.64566647074242556, 0.40771266489776975, 0.0025132671745975639},
    {0.64566647074242556, 0.64566647074242556, -0.40771266489776975, 0.0025132671745975639},
    {-0.64566647074242556, -0.64566647074242556, 0.40771266489776975, 0.0025132671745975639},
    {-0.64566647074242556, 0.64566647074242556, -0.40771266489776975, 0.0025132671745975639},
    {0.64566647074242556, -0.64566647074242556, -0.40771266489776975, 0.0025132671745975639},
    {-0.64566647074242556, -0.64566647074242556, -0.40771266489776975, 0.0025132671745975639},
    {-0.64566647074242556, 0.40771266489776975, 0.64566647074242556, 0.0025132671745975639},
    {0.64566647074242556, -0.40771266489776975, 0.64566647074242556, 0.0025132671745975639},
    {0.64566647074242556, 0.40771266489776975, -0.64566647074242556, 0.0025132671745975639},
    {-0.64566647074242556, -0.40771266489776975, 0.64566647074242556, 0.0025132671745975639},
    {-0.64566647074242556, 0.40771266489776975, -0.64566647074242556, 0.0025132671745975639},
    {0.64566647074242556, -0.40771266489776975, -0.64566647074242556, 0.0025132671745975639},
    {-0.64566647074242556, -0.40771266489776975, -0.64566647074242556, 0.0025132671745975639},
    {0.64566647074242556, 0.40771266489776975, 0.64566647074242556, 0.0025132671745975639},
    {0.40771266489776975, 0.64566647074242556, 0.64566647074242556, 0.0025132671745975639},
    {-0.40771266489776975, 0.64566647074242556, 0.64566647074242556, 0.0025132671745975639},
    {0.40771266489776975, -0.64566647074242556, 0.64566647074242556, 0.0025132671745975639},
    {0.40771266489776975, 0.64566647074242556, -0.64566647074242556, 0.0025132671745975639},
    {-0.40771266489776975, -0.64566647074242556, 0.64566647074242556, 0.0025132671745975639},
    {-0.40771266489776975, 0.64566647074242556, -0.64566647074242556, 0.0025132671745975639},
    {0.40771266489776975, -0.64566647074242556, -0.64566647074242556, 0.0025132671745975639},
    {-0.40771266489776975, -0.64566647074242556, -0.64566647074242556, 0.0025132671745975639},
    {0.28612890103076383, 0.28612890103076383, 0.91447280112087248, 0.0023026947822274162},
    {-0.28612890103076383, 0.28612890103076383, 0.91447280112087248, 0.0023026947822274162},
    {0.28612890103076383, -0.28612890103076383, 0.91447280112087248, 0.0023026947822274162},
    {0.28612890103076383, 0.28612890103076383, -0.91447280112087248, 0.0023026947822274162},
    {-0.28612890103076383, -0.28612890103076383, 0.91447280112087248, 0.0023026947822274162},
    {-0.28612890103076383, 0.28612890103076383, -0.91447280112087248, 0.0023026947822274162},
    {0.28612890103076383, -0.28612890103076383, -0.91447280112087248, 0.0023026947822274162},
    {-0.28612890103076383, -0.28612890103076383, -0.91447280112087248, 0.0023026947822274162},
    {-0.28612890103076383, 0.91447280112087248, 0.28612890103076383, 0.0023026947822274162},
    {0.28612890103076383, -0.91447280112087248, 0.28612890103076383, 0.0023026947822274162},
    {0.28612890103076383, 0.91447280112087248, -0.28612890103076383, 0.0023026947822274162},
    {-0.28612890103076383, -0.91447280112087248, 0.28612890103076383, 0.0023026947822274162},
    {-0.28612890103076383, 0.91447280112087248, -0.28612890103076383, 0.0023026947822274162},
    {0.28612890103076383, -0.91447280112087248, -0.28612890103076383, 0.0023026947822274162},
    {-0.28612890103076383, -0.91447280112087248, -0.28612890103076383, 0.0023026947822274162},
    {0.28612890103076383, 0.91447280112087248, 0.28612890103076383, 0.0023026947822274162},
    {0.91447280112087248, 0.28612890103076383, 0.28612890103076383, 0.0023026947822274162},
    {-0.91447280112087248, 0.28612890103076383, 0.28612890103076383, 0.0023026947822274162},
    {0.91447280112087248, -0.28612890103076383, 0.28612890103076383, 0.0023026947822274162},
    {0.91447280112087248, 0.28612890103076383, -0.28612890103076383, 0.0023026947822274162},
    {-0.91447280112087248, -0.28612890103076383, 0.28612890103076383, 0.0023026947822274162},
    {-0.91447280112087248, 0.28612890103076383, -0.28612890103076383, 0.0023026947822274162},
    {0.91447280112087248, -0.28612890103076383, -0.28612890103076383, 0.0023026947822274162},
    {-0.91447280112087248, -0.28612890103076383, -0.28612890103076383, 0.0023026947822274162},
    {0.075680843671780185, 0.075680843671780185, 0.99425591263127788, 0.001462495621594614},
    {-0.075680843671780185, 0.075680843671780185, 0.99425591263127788, 0.001462495621594614},
    {0.075680843671780185, -0.075680843671780185, 0.99425591263127788, 0.001462495621594614},
    {0.075680843671780185, 0.075680843671780185, -0.99425591263127788, 0.001462495621594614},
    {-0.075680843671780185, -0.075680843671780185, 0.99425591263127788, 0.001462495621594614},
    {-0.075680843671780185, 0.075680843671780185, -0.99425591263127788, 0.001462495621594614},
    {0.075680843671780185, -0.075680843671780185, -0.99425591263127788, 0.001462495621594614},
    {-0.075680843671780185, -0.075680843671780185, -0.99425591263127788, 0.001462495621594614},
    {-0.075680843671780185, 0.99425591263127788, 0.075680843671780185, 0.001462495621594614},
    {0.075680843671780185, -0.99425591263127788, 0.075680843671780185, 0.001462495621594614},
    {0.075680843671780185, 0.99425591263127788, -0.075680843671780185, 0.001462495621594614},
    {-0.075680843671780185, -0.99425591263127788, 0.075680843671780185, 0.001462495621594614},
    {-0.075680843671780185, 0.99425591263127788, -0.075680843671780185, 0.001462495621594614},
    {0.075680843671780185, -0.99425591263127788, -0.075680843671780185, 0.001462495621594614},
    {-0.075680843671780185, -0.99425591263127788, -0.075680843671780185, 0.001462495621594614},
    {0.075680843671780185, 0.99425591263127788, 0.075680843671780185, 0.001462495621594614},
    {0.99425591263127788, 0.075680843671780185, 0.075680843671780185, 0.001462495621594614},
    {-0.99425591263127788, 0.075680843671780185, 0.075680843671780185, 0.001462495621594614},
    {0.99425591263127788, -0.075680843671780185, 0.075680843671780185, 0.001462495621594614},
    {0.99425591263127788, 0.075680843671780185, -0.075680843671780185, 0.001462495621594614},
    {-0.99425591263127788, -0.075680843671780185, 0.075680843671780185, 0.001462495621594614},
    {-0.99425591263127788, 0.075680843671780185, -0.075680843671780185, 0.001462495621594614},
    {0.99425591263127788, -0.075680843671780185, -0.075680843671780185, 0.001462495621594614},
    {-0.99425591263127788, -0.075680843671780185, -0.075680843671780185, 0.001462495621594614},
    {0.39272597633680018, 0.39272597633680018, 0.83158440041923232, 0.0024453734373129799},
    {-0.39272597633680018, 0.39272597633680018, 0.83158440041923232, 0.0024453734373129799},
    {0.39272597633680018, -0.39272597633680018, 0.83158440041923232, 0.0024453734373129799},
    {0.39272597633680018, 0.39272597633680018, -0.83158440041923232, 0.0024453734373129799},
    {-0.39272597633680018, -0.39272597633680018, 0.83158440041923232, 0.0024453734373129799},
    {-0.39272597633680018, 0.39272597633680018, -0.83158440041923232, 0.0024453734373129799},
    {0.39272597633680018, -0.39272597633680018, -0.83158440041923232, 0.0024453734373129799},
    {-0.39272597633680018, -0.39272597633680018, -0.83158440041923232, 0.0024453734373129799},
    {-0.39272597633680018, 0.83158440041923232, 0.39272597633680018, 0.0024453734373129799},
    {0.39272597633680018, -0.83158440041923232, 0.39272597633680018, 0.0024453734373129799},
    {0.39272597633680018, 0.83158440041923232, -0.39272597633680018, 0.0024453734373129799},
    {-0.39272597633680018, -0.83158440041923232, 0.39272597633680018, 0.0024453734373129799},
    {-0.39272597633680018, 0.83158440041923232, -0.39272597633680018, 0.0024453734373129799},
    {0.39272597633680018, -0.83158440041923232, -0.39272597633680018, 0.0024453734373129799},
    {-0.39272597633680018, -0.83158440041923232, -0.39272597633680018, 0.0024453734373129799},
    {0.39272597633680018, 0.83158440041923232, 0.39272597633680018, 0.0024453734373129799},
    {0.83158440041923232, 0.39272597633680018, 0.39272597633680018, 0.0024453734373129799},
    {-0.83158440041923232, 0.39272597633680018, 0.39272597633680018, 0.0024453734373129799},
    {0.83158440041923232, -0.39272597633680018, 0.39272597633680018, 0.0024453734373129799},
    {0.83158440041923232, 0.39272597633680018, -0.39272597633680018, 0.0024453734373129799},
    {-0.83158440041923232, -0.39272597633680018, 0.39272597633680018, 0.0024453734373129799},
    {-0.83158440041923232, 0.39272597633680018, -0.39272597633680018, 0.0024453734373129799},
    {0.83158440041923232, -0.39272597633680018, -0.39272597633680018, 0.0024453734373129799},
    {-0.83158440041923232, -0.39272597633680018, -0.39272597633680018, 0.0024453734373129799},
    {0.8818132877794288, 0.47159869115131597, 0, 0.002417442375638981},
    {-0.8818132877794288, 0.47159869115131597, 0, 0.002417442375638981},
    {0.8818132877794288, -0.47159869115131597, 0, 0.002417442375638981},
    {-0.8818132877794288, -0.47159869115131597, 0, 0.002417442375638981},
    {0.47159869115131597, 0.8818132877794288, 0, 0.002417442375638981},
    {-0.47159869115131597, 0.8818132877794288, 0, 0.002417442375638981},
    {0.47159869115131597, -0.8818132877794288, 0, 0.002417442375638981},
    {-0.47159869115131597, -0.8818132877794288, 0, 0.002417442375638981},
    {0.8818132877794288, 0, 0.47159869115131597, 0.002417442375638981},
    {-0.8818132877794288, 0, 0.47159869115131597, 0.002417442375638981},
    {0.8818132877794288, 0, -0.47159869115131597, 0.002417442375638981},
    {-0.8818132877794288, 0, -0.47159869115131597, 0.002417442375638981},
    {0.47159869115131597, 0, 0.8818132877794288, 0.002417442375638981},
    {-0.47159869115131597, 0, 0.8818132877794288, 0.002417442375638981},
    {0.47159869115131597, 0, -0.8818132877794288, 0.002417442375638981},
    {-0.47159869115131597, 0, -0.8818132877794288, 0.002417442375638981},
    {0, 0.8818132877794288, 0.47159869115131597, 0.002417442375638981},
    {0, -0.8818132877794288, 0.47159869115131597, 0.002417442375638981},
    {0, 0.8818132877794288, -0.47159869115131597, 0.002417442375638981},
    {0, -0.8818132877794288, -0.47159869115131597, 0.002417442375638981},
    {0, 0.47159869115131597, 0.8818132877794288, 0.002417442375638981},
    {0, -0.47159869115131597, 0.8818132877794288, 0.002417442375638981},
    {0, 0.47159869115131597, -0.8818132877794288, 0.002417442375638981},
    {0, -0.47159869115131597, -0.8818132877794288, 0.002417442375638981},
    {0.9776428111182649, 0.2102725228573068, 0, 0.0019109512821795321},
    {-0.9776428111182649, 0.2102725228573068, 0, 0.0019109512821795321},
    {0.9776428111182649, -0.2102725228573068, 0, 0.0019109512821795321},
    {-0.9776428111182649, -0.2102725228573068, 0, 0.0019109512821795321},
    {0.2102725228573068, 0.9776428111182649, 0, 0.0019109512821795321},
    {-0.2102725228573068, 0.9776428111182649, 0, 0.0019109512821795321},
    {0.2102725228573068, -0.9776428111182649, 0, 0.0019109512821795321},
    {-0.2102725228573068, -0.9776428111182649, 0, 0.0019109512821795321},
    {0.9776428111182649, 0, 0.2102725228573068, 0.0019109512821795321},
    {-0.9776428111182649, 0, 0.2102725228573068, 0.0019109512821795321},
    {0.9776428111182649, 0, -0.2102725228573068, 0.0019109512821795321},
    {-0.9776428111182649, 0, -0.2102725228573068, 0.0019109512821795321},
    {0.2102725228573068, 0, 0.9776428111182649, 0.0019109512821795321},
    {-0.2102725228573068, 0, 0.9776428111182649, 0.0019109512821795321},
    {0.2102725228573068, 0, -0.9776428111182649, 0.0019109512821795321},
    {-0.2102725228573068, 0, -0.9776428111182649, 0.0019109512821795321},
    {0, 0.9776428111182649, 0.2102725228573068, 0.0019109512821795321},
    {0, -0.9776428111182649, 0.2102725228573068, 0.0019109512821795321},
    {0, 0.9776428111182649, -0.2102725228573068, 0.0019109512821795321},
    {0, -0.9776428111182649, -0.2102725228573068, 0.0019109512821795321},
    {0, 0.2102725228573068, 0.9776428111182649, 0.0019109512821795321},
    {0, -0.2102725228573068, 0.9776428111182649, 0.0019109512821795321},
    {0, 0.2102725228573068, -0.9776428111182649, 0.0019109512821795321},
    {0, -0.2102725228573068, -0.9776428111182649, 0.0019109512821795321},
    {0.20548236964030439, 0.86894603228724121, 0.4502330382582625, 0.002416930044324775},
    {-0.20548236964030439, 0.86894603228724121, 0.4502330382582625, 0.002416930044324775},
    {0.20548236964030439, -0.86894603228724121, 0.4502330382582625, 0.002416930044324775},
    {0.20548236964030439, 0.86894603228724121, -0.4502330382582625, 0.002416930044324775},
    {-0.20548236964030439, -0.86894603228724121, 0.4502330382582625, 0.002416930044324775},
    {0.20548236964030439, -0.86894603228724121, -0.4502330382582625, 0.002416930044324775},
    {-0.20548236964030439, 0.86894603228724121, -0.4502330382582625, 0.002416930044324775},
    {-0.20548236964030439, -0.86894603228724121, -0.4502330382582625, 0.002416930044324775},
    {0.86894603228724121, 0.20548236964030439, 0.4502330382582625, 0.002416930044324775},
    {-0.86894603228724121, 0.20548236964030439, 0.4502330382582625, 0.002416930044324775},
    {0.86894603228724121, -0.20548236964030439, 0.4502330382582625, 0.002416930044324775},
    {0.86894603228724121, 0.20548236964030439, -0.4502330382582625, 0.002416930044324775},
    {-0.86894603228724121, -0.20548236964030439, 0.4502330382582625, 0.002416930044324775},
    {0.86894603228724121, -0.20548236964030439, -0.4502330382582625, 0.002416930044324775},
    {-0.86894603228724121, 0.20548236964030439, -0.4502330382582625, 0.002416930044324775},
    {-0.86894603228724121, -0.20548236964030439, -0.4502330382582625, 0.002416930044324775},
    {0.4502330382582625, 0.20548236964030439, 0.86894603228724121, 0.002416930044324775},
    {-0.4502330382582625, 0.20548236964030439, 0.86894603228724121, 0.002416930044324775},
    {0.4502330382582625, -0.20548236964030439, 0.86894603228724121, 0.002416930044324775},
    {0.4502330382582625, 0.20548236964030439, -0.86894603228724121, 0.002416930044324775},
    {-0.4502330382582625, -0.20548236964030439, 0.86894603228724121, 0.002416930044324775},
    {0.4502330382582625, -0.20548236964030439, -0.86894603228724121, 0.002416930044324775},
    {-0.4502330382582625, 0.20548236964030439, -0.86894603228724121, 0.002416930044324775},
    {-0.4502330382582625, -0.20548236964030439, -0.86894603228724121, 0.002416930044324775},
    {0.4502330382582625, 0.86894603228724121, 0.20548236964030439, 0.002416930044324775},
    {-0.4502330382582625, 0.86894603228724121, 0.20548236964030439, 0.002416930044324775},
    {0.4502330382582625, -0.86894603228724121, 0.20548236964030439, 0.002416930044324775},
    {0.4502330382582625, 0.86894603228724121, -0.20548236964030439, 0.002416930044324775},
    {-0.4502330382582625, -0.86894603228724121, 0.20548236964030439, 0.002416930044324775},
    {0.4502330382582625, -0.86894603228724121, -0.20548236964030439, 0.002416930044324775},
    {-0.4502330382582625, 0.86894603228724121, -0.20548236964030439, 0.002416930044324775},
    {-0.4502330382582625, -0.86894603228724121, -0.20548236964030439, 0.002416930044324775},
    {0.20548236964030439, 0.4502330382582625, 0.86894603228724121, 0.002416930044324775},
    {-0.20548236964030439, 0.4502330382582625, 0.86894603228724121, 0.002416930044324775},
    {0.20548236964030439, -0.4502330382582625, 0.86894603228724121, 0.002416930044324775},
    {0.20548236964030439, 0.4502330382582625, -0.86894603228724121, 0.002416930044324775},
    {-0.20548236964030439, -0.4502330382582625, 0.86894603228724121, 0.002416930044324775},
    {0.20548236964030439, -0.4502330382582625, -0.86894603228724121, 0.002416930044324775},
    {-0.20548236964030439, 0.4502330382582625, -0.86894603228724121, 0.002416930044324775},
    {-0.20548236964030439, -0.4502330382582625, -0.86894603228724121, 0.002416930044324775},
    {0.86894603228724121, 0.4502330382582625, 0.20548236964030439, 0.002416930044324775},
    {-0.86894603228724121, 0.4502330382582625, 0.20548236964030439, 0.002416930044324775},
    {0.86894603228724121, -0.4502330382582625, 0.20548236964030439, 0.002416930044324775},
    {0.86894603228724121, 0.4502330382582625, -0.20548236964030439, 0.002416930044324775},
    {-0.86894603228724121, -0.4502330382582625, 0.20548236964030439, 0.002416930044324775},
    {0.86894603228724121, -0.4502330382582625, -0.20548236964030439, 0.002416930044324775},
    {-0.86894603228724121, 0.4502330382582625, -0.20548236964030439, 0.002416930044324775},
    {-0.86894603228724121, -0.4502330382582625, -0.20548236964030439, 0.002416930044324775},
    {0.59051570489252714, 0.79992785438572855, 0.10680182607580488, 0.0025122368545634952},
    {-0.59051570489252714, 0.79992785438572855, 0.10680182607580488, 0.0025122368545634952},
    {0.59051570489252714, -0.79992785438572855, 0.10680182607580488, 0.0025122368545634952},
    {0.59051570489252714, 0.79992785438572855, -0.10680182607580488, 0.0025122368545634952},
    {-0.59051570489252714, -0.79992785438572855, 0.10680182607580488, 0.0025122368545634952},
    {0.59051570489252714, -0.79992785438572855, -0.10680182607580488, 0.0025122368545634952},
    {-0.59051570489252714, 0.79992785438572855, -0.10680182607580488, 0.0025122368545634952},
    {-0.59051570489252714, -0.79992785438572855, -0.10680182607580488, 0.0025122368545634952},
    {0.79992785438572855, 0.59051570489252714, 0.10680182607580488, 0.0025122368545634952},
    {-0.79992785438572855, 0.59051570489252714, 0.10680182607580488, 0.0025122368545634952},
    {0.79992785438572855, -0.59051570489252714, 0.10680182607580488, 0.0025122368545634952},
    {0.79992785438572855, 0.59051570489252714, -0.10680182607580488, 0.0025122368545634952},
    {-0.79992785438572855, -0.59051570489252714, 0.10680182607580488, 0.0025122368545634952},
    {0.79992785438572855, -0.59051570489252714, -0.10680182607580488, 0.0025122368545634952},
    {-0.79992785438572855, 0.59051570489252714, -0.10680182607580488, 0.0025122368545634952},
    {-0.79992785438572855, -0.59051570489252714, -0.10680182607580488, 0.0025122368545634952},
    {0.10680182607580488, 0.59051570489252714, 0.79992785438572855, 0.0025122368545634952},
    {-0.10680182607580488, 0.59051570489252714, 0.79992785438572855, 0.0025122368545634952},
    {0.10680182607580488, -0.59051570489252714, 0.79992785438572855, 0.0025122368545634952},
    {0.10680182607580488, 0.59051570489252714, -0.79992785438572855, 0.0025122368545634952},
    {-0.10680182607580488, -0.59051570489252714, 0.79992785438572855, 0.0025122368545634952},
    {0.10680182607580488, -0.59051570489252714, -0.79992785438572855, 0.0025122368545634952},
    {-0.10680182607580488, 0.59051570489252714, -0.79992785438572855, 0.0025122368545634952},
    {-0.10680182607580488, -0.59051570489252714, -0.79992785438572855, 0.0025122368545634952},
    {0.10680182607580488, 0.79992785438572855, 0.59051570489252714, 0.0025122368545634952},
    {-0.10680182607580488, 0.79992785438572855, 0.59051570489252714, 0.0025122368545634952},
    {0.10680182607580488, -0.79992785438572855, 0.59051570489252714, 0.0025122368545634952},
    {0.10680182607580488, 0.79992785438572855, -0.59051570489252714, 0.0025122368545634952},
    {-0.10680182607580488, -0.79992785438572855, 0.59051570489252714, 0.0025122368545634952},
    {0.10680182607580488, -0.79992785438572855, -0.59051570489252714, 0.0025122368545634952},
    {-0.10680182607580488, 0.79992785438572855, -0.59051570489252714, 0.0025122368545634952},
    {-0.10680182607580488, -0.79992785438572855, -0.59051570489252714, 0.0025122368545634952},
    {0.59051570489252714, 0.10680182607580488, 0.79992785438572855, 0.0025122368545634952},
    {-0.59051570489252714, 0.10680182607580488, 0.79992785438572855, 0.0025122368545634952},
    {0.59051570489252714, -0.10680182607580488, 0.79992785438572855, 0.0025122368545634952},
    {0.59051570489252714, 0.10680182607580488, -0.79992785438572855, 0.0025122368545634952},
    {-0.59051570489252714, -0.10680182607580488, 0.79992785438572855, 0.0025122368545634952},
    {0.59051570489252714, -0.10680182607580488, -0.79992785438572855, 0.0025122368545634952},
    {-0.59051570489252714, 0.10680182607580488, -0.79992785438572855, 0.0025122368545634952},
    {-0.59051570489252714, -0.10680182607580488, -0.79992785438572855, 0.0025122368545634952},
    {0.79992785438572855, 0.10680182607580488, 0.59051570489252714, 0.0025122368545634952},
    {-0.79992785438572855, 0.10680182607580488, 0.59051570489252714, 0.0025122368545634952},
    {0.79992785438572855, -0.10680182607580488, 0.59051570489252714, 0.0025122368545634952},
    {0.79992785438572855, 0.10680182607580488, -0.59051570489252714, 0.0025122368545634952},
    {-0.79992785438572855, -0.10680182607580488, 0.59051570489252714, 0.0025122368545634952},
    {0.79992785438572855, -0.10680182607580488, -0.59051570489252714, 0.0025122368545634952},
    {-0.79992785438572855, 0.10680182607580488, -0.59051570489252714, 0.0025122368545634952},
    {-0.79992785438572855, -0.10680182607580488, -0.59051570489252714, 0.0025122368545634952},
    {0.55501523610768067, 0.77174626269159008, 0.31042840351665446, 0.0024966440545530861},
    {-0.55501523610768067, 0.77174626269159008, 0.31042840351665446, 0.0024966440545530861},
    {0.55501523610768067, -0.77174626269159008, 0.31042840351665446, 0.0024966440545530861},
    {0.55501523610768067, 0.77174626269159008, -0.31042840351665446, 0.0024966440545530861},
    {-0.55501523610768067, -0.77174626269159008, 0.31042840351665446, 0.0024966440545530861},
    {0.55501523610768067, -0.77174626269159008, -0.31042840351665446, 0.0024966440545530861},
    {-0.55501523610768067, 0.77174626269159008, -0.31042840351665446, 0.0024966440545530861},
    {-0.55501523610768067, -0.77174626269159008, -0.31042840351665446, 0.0024966440545530861},
    {0.77174626269159008, 0.55501523610768067, 0.31042840351665446, 0.0024966440545530861},
    {-0.77174626269159008, 0.55501523610768067, 0.31042840351665446, 0.0024966440545530861},
    {0.77174626269159008, -0.55501523610768067, 0.31042840351665446, 0.0024966440545530861},
    {0.77174626269159008, 0.55501523610768067, -0.31042840351665446, 0.0024966440545530861},
    {-0.77174626269159008, -0.55501523610768067, 0.31042840351665446, 0.0024966440545530861},
    {0.77174626269159008, -0.55501523610768067, -0.31042840351665446, 0.0024966440545530861},
    {-0.77174626269159008, 0.55501523610768067, -0.31042840351665446, 0.0024966440545530861},
    {-0.77174626269159008, -0.55501523610768067, -0.31042840351665446, 0.0024966440545530861},
    {0.31042840351665446, 0.55501523610768067, 0.77174626269159008, 0.0024966440545530861},
    {-0.31042840351665446, 0.55501523610768067, 0.77174626269159008, 0.0024966440545530861},
    {0.31042840351665446, -0.55501523610768067, 0.77174626269159008, 0.0024966440545530861},
    {0.31042840351665446, 0.55501523610768067, -0.77174626269159008, 0.0024966440545530861},
    {-0.31042840351665446, -0.55501523610768067, 0.77174626269159008, 0.0024966440545530861},
    {0.31042840351665446, -0.55501523610768067, -0.77174626269159008, 0.0024966440545530861},
    {-0.31042840351665446, 0.55501523610768067, -0.77174626269159008, 0.0024966440545530861},
    {-0.31042840351665446, -0.55501523610768067, -0.77174626269159008, 0.0024966440545530861},
    {0.31042840351665446, 0.77174626269159008, 0.55501523610768067, 0.0024966440545530861},
    {-0.31042840351665446, 0.77174626269159008, 0.55501523610768067, 0.0024966440545530861},
    {0.31042840351665446, -0.77174626269159008, 0.55501523610768067, 0.0024966440545530861},
    {0.31042840351665446, 0.77174626269159008, -0.55501523610768067, 0.0024966440545530861},
    {-0.31042840351665446, -0.77174626269159008, 0.55501523610768067, 0.0024966440545530861},
    {0.31042840351665446, -0.77174626269159008, -0.55501523610768067, 0.0024966440545530861},
    {-0.31042840351665446, 0.77174626269159008, -0.55501523610768067, 0.0024966440545530861},
    {-0.31042840351665446, -0.77174626269159008, -0.55501523610768067, 0.0024966440545530861},
    {0.55501523610768067, 0.31042840351665446, 0.77174626269159008, 0.0024966440545530861},
    {-0.55501523610768067, 0.31042840351665446, 0.77174626269159008, 0.0024966440545530861},
    {0.55501523610768067, -0.31042840351665446, 0.77174626269159008, 0.0024966440545530861},
    {0.55501523610768067, 0.31042840351665446, -0.77174626269159008, 0.0024966440545530861},
    {-0.55501523610768067, -0.31042840351665446, 0.77174626269159008, 0.0024966440545530861},
    {0.55501523610768067, -0.31042840351665446, -0.77174626269159008, 0.0024966440545530861},
    {-0.55501523610768067, 0.31042840351665446, -0.77174626269159008, 0.0024966440545530861},
    {-0.55501523610768067, -0.31042840351665446, -0.77174626269159008, 0.0024966440545530861},
    {0.77174626269159008, 0.31042840351665446, 0.55501523610768067, 0.0024966440545530861},
    {-0.77174626269159008, 0.31042840351665446, 0.55501523610768067, 0.0024966440545530861},
    {0.77174626269159008, -0.31042840351665446, 0.55501523610768067, 0.0024966440545530861},
    {0.77174626269159008, 0.31042840351665446, -0.55501523610768067, 0.0024966440545530861},
    {-0.77174626269159008, -0.31042840351665446, 0.55501523610768067, 0.0024966440545530861},
    {0.77174626269159008, -0.31042840351665446, -0.55501523610768067, 0.0024966440545530861},
    {-0.77174626269159008, 0.31042840351665446, -0.55501523610768067, 0.0024966440545530861},
    {-0.77174626269159008, -0.31042840351665446, -0.55501523610768067, 0.0024966440545530861},
    {0.93718098585537224, 0.33443631453434552, 0.099217696364292479, 0.0022366077604378488},
    {-0.93718098585537224, 0.33443631453434552, 0.099217696364292479, 0.0022366077604378488},
    {0.93718098585537224, -0.33443631453434552, 0.099217696364292479, 0.0022366077604378488},
    {0.93718098585537224, 0.33443631453434552, -0.099217696364292479, 0.0022366077604378488},
    {-0.93718098585537224, -0.33443631453434552, 0.099217696364292479, 0.0022366077604378488},
    {0.93718098585537224, -0.33443631453434552, -0.099217696364292479, 0.0022366077604378488},
    {-0.93718098585537224, 0.33443631453434552, -0.099217696364292479, 0.0022366077604378488},
    {-0.93718098585537224, -0.33443631453434552, -0.099217696364292479, 0.0022366077604378488},
    {0.33443631453434552, 0.93718098585537224, 0.099217696364292479, 0.0022366077604378488},
    {-0.33443631453434552, 0.93718098585537224, 0.099217696364292479, 0.0022366077604378488},
    {0.33443631453434552, -0.93718098585537224, 0.099217696364292479, 0.0022366077604378488},
    {0.33443631453434552, 0.93718098585537224, -0.099217696364292479, 0.0022366077604378488},
    {-0.33443631453434552, -0.93718098585537224, 0.099217696364292479, 0.0022366077604378488},
    {0.33443631453434552, -0.93718098585537224, -0.099217696364292479, 0.0022366077604378488},
    {-0.33443631453434552, 0.93718098585537224, -0.099217696364292479, 0.0022366077604378488},
    {-0.33443631453434552, -0.93718098585537224, -0.099217696364292479, 0.0022366077604378488},
    {0.099217696364292479, 0.93718098585537224, 0.33443631453434552, 0.0022366077604378488},
    {-0.099217696364292479, 0.93718098585537224, 0.33443631453434552, 0.0022366077604378488},
    {0.099217696364292479, -0.93718098585537224, 0.33443631453434552, 0.0022366077604378488},
    {0.099217696364292479, 0.93718098585537224, -0.33443631453434552, 0.0022366077604378488},
    {-0.099217696364292479, -0.93718098585537224, 0.33443631453434552, 0.0022366077604378488},
    {0.099217696364292479, -0.93718098585537224, -0.33443631453434552, 0.0022366077604378488},
    {-0.099217696364292479, 0.93718098585537224, -0.33443631453434552, 0.0022366077604378488},
    {-0.099217696364292479, -0.93718098585537224, -0.33443631453434552, 0.0022366077604378488},
    {0.099217696364292479, 0.33443631453434552, 0.93718098585537224, 0.0022366077604378488},
    {-0.099217696364292479, 0.33443631453434552, 0.93718098585537224, 0.0022366077604378488},
    {0.099217696364292479, -0.33443631453434552, 0.93718098585537224, 0.0022366077604378488},
    {0.099217696364292479, 0.33443631453434552, -0.93718098585537224, 0.0022366077604378488},
    {-0.099217696364292479, -0.33443631453434552, 0.93718098585537224, 0.0022366077604378488},
    {0.099217696364292479, -0.33443631453434552, -0.93718098585537224, 0.0022366077604378488},
    {-0.099217696364292479, 0.33443631453434552, -0.93718098585537224, 0.0022366077604378488},
    {-0.099217696364292479, -0.33443631453434552, -0.93718098585537224, 0.0022366077604378488},
    {0.93718098585537224, 0.099217696364292479, 0.33443631453434552, 0.0022366077604378488},
    {-0.93718098585537224, 0.099217696364292479, 0.33443631453434552, 0.0022366077604378488},
    {0.93718098585537224, -0.099217696364292479, 0.33443631453434552, 0.0022366077604378488},
    {0.93718098585537224, 0.099217696364292479, -0.33443631453434552, 0.0022366077604378488},
    {-0.93718098585537224, -0.099217696364292479, 0.33443631453434552, 0.0022366077604378488},
    {0.93718098585537224, -0.099217696364292479, -0.33443631453434552, 0.0022366077604378488},
    {-0.93718098585537224, 0.099217696364292479, -0.33443631453434552, 0.0022366077604378488},
    {-0.93718098585537224, -0.099217696364292479, -0.33443631453434552, 0.0022366077604378488},
    {0.33443631453434552, 0.099217696364292479, 0.93718098585537224, 0.0022366077604378488},
    {-0.33443631453434552, 0.099217696364292479, 0.93718098585537224, 0.0022366077604378488},
    {0.33443631453434552, -0.099217696364292479, 0.93718098585537224, 0.0022366077604378488},
    {0.33443631453434552, 0.099217696364292479, -0.93718098585537224, 0.0022366077604378488},
    {-0.33443631453434552, -0.099217696364292479, 0.93718098585537224, 0.0022366077604378488},
    {0.33443631453434552, -0.099217696364292479, -0.93718098585537224, 0.0022366077604378488},
    {-0.33443631453434552, 0.099217696364292479, -0.93718098585537224, 0.0022366077604378488},
    {-0.33443631453434552, -0.099217696364292479, -0.93718098585537224, 0.0022366077604378488},
};
constexpr LebedevPoint kOrder65[] = {
    {1, 0, 0, 7.7771607432612467e-05},
    {-1, 0, 0, 7.7771607432612467e-05},
    {0, 1, 0, 7.7771607432612467e-05},
    {0, -1, 0, 7.7771607432612467e-05},
    {0, 0, 1, 7.7771607432612467e-05},
    {0, 0, -1, 7.7771607432612467e-05},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.00075576464130047011},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.00075576464130047011},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.00075576464130047011},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.00075576464130047011},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.00075576464130047011},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.00075576464130047011},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.00075576464130047011},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.00075576464130047011},
    {0.032292906634138543, 0.032292906634138543, 0.99895662386423845, 0.00028416338060906172},
    {-0.032292906634138543, 0.032292906634138543, 0.99895662386423845, 0.00028416338060906172},
    {0.032292906634138543, -0.032292906634138543, 0.99895662386423845, 0.00028416338060906172},
    {0.032292906634138543, 0.032292906634138543, -0.99895662386423845, 0.00028416338060906172},
    {-0.032292906634138543, -0.032292906634138543, 0.99895662386423845, 0.00028416338060906172},
    {-0.032292906634138543, 0.032292906634138543, -0.99895662386423845, 0.00028416338060906172},
    {0.032292906634138543, -0.032292906634138543, -0.99895662386423845, 0.00028416338060906172},
    {-0.032292906634138543, -0.032292906634138543, -0.99895662386423845, 0.00028416338060906172},
    {-0.032292906634138543, 0.99895662386423845, 0.032292906634138543, 0.00028416338060906172},
    {0.032292906634138543, -0.99895662386423845, 0.032292906634138543, 0.00028416338060906172},
    {0.032292906634138543, 0.99895662386423845, -0.032292906634138543, 0.00028416338060906172},
    {-0.032292906634138543, -0.99895662386423845, 0.032292906634138543, 0.00028416338060906172},
    {-0.032292906634138543, 0.99895662386423845, -0.032292906634138543, 0.00028416338060906172},
    {0.032292906634138543, -0.99895662386423845, -0.032292906634138543, 0.00028416338060906172},
    {-0.032292906634138543, -0.99895662386423845, -0.032292906634138543, 0.00028416338060906172},
    {0.032292906634138543, 0.99895662386423845, 0.032292906634138543, 0.00028416338060906172},
    {0.99895662386423845, 0.032292906634138543, 0.032292906634138543, 0.00028416338060906172},
    {-0.99895662386423845, 0.032292906634138543, 0.032292906634138543, 0.00028416338060906172},
    {0.99895662386423845, -0.032292906634138543, 0.032292906634138543, 0.00028416338060906172},
    {0.99895662386423845, 0.032292906634138543, -0.032292906634138543, 0.00028416338060906172},
    {-0.99895662386423845, -0.032292906634138543, 0.032292906634138543, 0.00028416338060906172},
    {-0.99895662386423845, 0.032292906634138543, -0.032292906634138543, 0.00028416338060906172},
    {0.99895662386423845, -0.032292906634138543, -0.032292906634138543, 0.00028416338060906172},
    {-0.99895662386423845, -0.032292906634138543, -0.032292906634138543, 0.00028416338060906172},
    {0.080367332714622222, 0.080367332714622222, 0.99352009726259405, 0.00043744191270535552},
    {-0.080367332714622222, 0.080367332714622222, 0.99352009726259405, 0.00043744191270535552},
    {0.080367332714622222, -0.080367332714622222, 0.99352009726259405, 0.00043744191270535552},
    {0.080367332714622222, 0.080367332714622222, -0.99352009726259405, 0.00043744191270535552},
    {-0.080367332714622222, -0.080367332714622222, 0.99352009726259405, 0.00043744191270535552},
    {-0.080367332714622222, 0.080367332714622222, -0.99352009726259405, 0.00043744191270535552},
    {0.080367332714622222, -0.080367332714622222, -0.99352009726259405, 0.00043744191270535552},
    {-0.080367332714622222, -0.080367332714622222, -0.99352009726259405, 0.00043744191270535552},
    {-0.080367332714622222, 0.99352009726259405, 0.080367332714622222, 0.00043744191270535552},
    {0.080367332714622222, -0.99352009726259405, 0.080367332714622222, 0.00043744191270535552},
    {0.080367332714622222, 0.99352009726259405, -0.080367332714622222, 0.00043744191270535552},
    {-0.080367332714622222, -0.99352009726259405, 0.080367332714622222, 0.00043744191270535552},
    {-0.080367332714622222, 0.99352009726259405, -0.080367332714622222, 0.00043744191270535552},
    {0.080367332714622222, -0.99352009726259405, -0.080367332714622222, 0.00043744191270535552},
    {-0.080367332714622222, -0.99352009726259405, -0.080367332714622222, 0.00043744191270535552},
    {0.080367332714622222, 0.99352009726259405, 0.080367332714622222, 0.00043744191270535552},
    {0.99352009726259405, 0.080367332714622222, 0.080367332714622222, 0.00043744191270535552},
    {-0.99352009726259405, 0.080367332714622222, 0.080367332714622222, 0.00043744191270535552},
    {0.99352009726259405, -0.080367332714622222, 0.080367332714622222, 0.00043744191270535552},
    {0.99352009726259405, 0.080367332714622222, -0.080367332714622222, 0.00043744191270535552},
    {-0.99352009726259405, -0.080367332714622222, 0.080367332714622222, 0.00043744191270535552},
    {-0.99352009726259405, 0.080367332714622222, -0.080367332714622222, 0.00043744191270535552},
    {0.99352009726259405, -0.080367332714622222, -0.080367332714622222, 0.00043744191270535552},
    {-0.99352009726259405, -0.080367332714622222, -0.080367332714622222, 0.00043744191270535552},
    {0.1354289960531653, 0.1354289960531653, 0.98148763316511711, 0.00054171747408721723},
    {-0.1354289960531653, 0.1354289960531653, 0.98148763316511711, 0.00054171747408721723},
    {0.1354289960531653, -0.1354289960531653, 0.98148763316511711, 0.00054171747408721723},
    {0.1354289960531653, 0.1354289960531653, -0.98148763316511711, 0.00054171747408721723},
    {-0.1354289960531653, -0.1354289960531653, 0.98148763316511711, 0.00054171747408721723},
    {-0.1354289960531653, 0.1354289960531653, -0.98148763316511711, 0.00054171747408721723},
    {0.1354289960531653, -0.1354289960531653, -0.98148763316511711, 0.00054171747408721723},
    {-0.1354289960531653, -0.1354289960531653, -0.98148763316511711, 0.00054171747408721723},
    {-0.1354289960531653, 0.98148763316511711, 0.1354289960531653, 0.00054171747408721723},
    {0.1354289960531653, -0.98148763316511711, 0.1354289960531653, 0.00054171747408721723},
    {0.1354289960531653, 0.98148763316511711, -0.1354289960531653, 0.00054171747408721723},
    {-0.1354289960531653, -0.98148763316511711, 0.1354289960531653, 0.00054171747408721723},
    {-0.1354289960531653, 0.98148763316511711, -0.1354289960531653, 0.00054171747408721723},
    {0.1354289960531653, -0.98148763316511711, -0.1354289960531653, 0.00054171747408721723},
    {-0.1354289960531653, -0.98148763316511711, -0.1354289960531653, 0.00054171747408721723},
    {0.1354289960531653, 0.98148763316511711, 0.1354289960531653, 0.00054171747408721723},
    {0.98148763316511711, 0.1354289960531653, 0.1354289960531653, 0.00054171747408721723},
    {-0.98148763316511711, 0.1354289960531653, 0.1354289960531653, 0.00054171747408721723},
    {0.98148763316511711, -0.1354289960531653, 0.1354289960531653, 0.00054171747408721723},
    {0.98148763316511711, 0.1354289960531653, -0.1354289960531653, 0.00054171747408721723},
    {-0.98148763316511711, -0.1354289960531653, 0.1354289960531653, 0.00054171747408721723},
    {-0.98148763316511711, 0.1354289960531653, -0.1354289960531653, 0.00054171747408721723},
    {0.98148763316511711, -0.1354289960531653, -0.1354289960531653, 0.00054171747408721723},
    {-0.98148763316511711, -0.1354289960531653, -0.1354289960531653, 0.00054171747408721723},
    {0.19389638611144261, 0.19389638611144261, 0.96166958094027533, 0.00061480008913585927},
    {-0.19389638611144261, 0.19389638611144261, 0.96166958094027533, 0.00061480008913585927},
    {0.19389638611144261, -0.19389638611144261, 0.96166958094027533, 0.00061480008913585927},
    {0.19389638611144261, 0.19389638611144261, -0.96166958094027533, 0.00061480008913585927},
    {-0.19389638611144261, -0.19389638611144261, 0.96166958094027533, 0.00061480008913585927},
    {-0.19389638611144261, 0.19389638611144261, -0.96166958094027533, 0.00061480008913585927},
    {0.19389638611144261, -0.19389638611144261, -0.96166958094027533, 0.00061480008913585927},
    {-0.19389638611144261, -0.19389638611144261, -0.96166958094027533, 0.00061480008913585927},
    {-0.19389638611144261, 0.96166958094027533, 0.19389638611144261, 0.00061480008913585927},
    {0.19389638611144261, -0.96166958094027533, 0.19389638611144261, 0.00061480008913585927},
    {0.19389638611144261, 0.96166958094027533, -0.19389638611144261, 0.00061480008913585927},
    {-0.19389638611144261, -0.96166958094027533, 0.19389638611144261, 0.00061480008913585927},
    {-0.19389638611144261, 0.96166958094027533, -0.19389638611144261, 0.00061480008913585927},
    {0.19389638611144261, -0.96166958094027533, -0.19389638611144261, 0.00061480008913585927},
    {-0.19389638611144261, -0.96166958094027533, -0.19389638611144261, 0.00061480008913585927},
    {0.19389638611144261, 0.96166958094027533, 0.19389638611144261, 0.00061480008913585927},
    {0.96166958094027533, 0.19389638611144261, 0.19389638611144261, 0.00061480008913585927},
    {-0.96166958094027533, 0.19389638611144261, 0.19389638611144261, 0.00061480008913585927},
    {0.96166958094027533, -0.19389638611144261, 0.19389638611144261, 0.00061480008913585927},
    {0.96166958094027533, 0.19389638611144261, -0.19389638611144261, 0.00061480008913585927},
    {-0.96166958094027533, -0.19389638611144261, 0.19389638611144261, 0.00061480008913585927},
    {-0.96166958094027533, 0.19389638611144261, -0.19389638611144261, 0.00061480008913585927},
    {0.96166958094027533, -0.19389638611144261, -0.19389638611144261, 0.00061480008913585927},
    {-0.96166958094027533, -0.19389638611144261, -0.19389638611144261, 0.00061480008913585927},
    {0.25373437150112749, 0.25373437150112749, 0.9334011664005224, 0.00066643944858007045},
    {-0.25373437150112749, 0.25373437150112749, 0.9334011664005224, 0.00066643944858007045},
    {0.25373437150112749, -0.25373437150112749, 0.9334011664005224, 0.00066643944858007045},
    {0.25373437150112749, 0.25373437150112749, -0.9334011664005224, 0.00066643944858007045},
    {-0.25373437150112749, -0.25373437150112749, 0.9334011664005224, 0.00066643944858007045},
    {-0.25373437150112749, 0.25373437150112749, -0.9334011664005224, 0.00066643944858007045},
    {0.25373437150112749, -0.25373437150112749, -0.9334011664005224, 0.00066643944858007045},
    {-0.25373437150112749, -0.25373437150112749, -0.9334011664005224, 0.00066643944858007045},
    {-0.25373437150112749, 0.9334011664005224, 0.25373437150112749, 0.00066643944858007045},
    {0.25373437150112749, -0.9334011664005224, 0.25373437150112749, 0.00066643944858007045},
    {0.25373437150112749, 0.9334011664005224, -0.25373437150112749, 0.00066643944858007045},
    {-0.25373437150112749, -0.9334011664005224, 0.25373437150112749, 0.00066643944858007045},
    {-0.25373437150112749, 0.9334011664005224, -0.25373437150112749, 0.00066643944858007045},
    {0.25373437150112749, -0.9334011664005224, -0.25373437150112749, 0.00066643944858007045},
    {-0.25373437150112749, -0.9334011664005224, -0.25373437150112749, 0.00066643944858007045},
    {0.25373437150112749, 0.9334011664005224, 0.25373437150112749, 0.00066643944858007045},
    {0.9334011664005224, 0.25373437150112749, 0.25373437150112749, 0.00066643944858007045},
    {-0.9334011664005224, 0.25373437150112749, 0.25373437150112749, 0.00066643944858007045},
    {0.9334011664005224, -0.25373437150112749, 0.25373437150112749, 0.00066643944858007045},
    {0.9334011664005224, 0.25373437150112749, -0.25373437150112749, 0.00066643944858007045},
    {-0.9334011664005224, -0.25373437150112749, 0.25373437150112749, 0.00066643944858007045},
    {-0.9334011664005224, 0.25373437150112749, -0.25373437150112749, 0.00066643944858007045},
    {0.9334011664005224, -0.25373437150112749, -0.25373437150112749, 0.00066643944858007045},
    {-0.9334011664005224, -0.25373437150112749, -0.25373437150112749, 0.00066643944858007045},
    {0.31352514347525701, 0.31352514347525701, 0.89632804754600814, 0.00070250393569232196},
    {-0.31352514347525701, 0.31352514347525701, 0.89632804754600814, 0.00070250393569232196},
    {0.31352514347525701, -0.31352514347525701, 0.89632804754600814, 0.00070250393569232196},
    {0.31352514347525701, 0.31352514347525701, -0.89632804754600814, 0.00070250393569232196},
    {-0.31352514347525701, -0.31352514347525701, 0.89632804754600814, 0.00070250393569232196},
    {-0.31352514347525701, 0.31352514347525701, -0.89632804754600814, 0.00070250393569232196},
    {0.31352514347525701, -0.31352514347525701, -0.89632804754600814, 0.00070250393569232196},
    {-0.31352514347525701, -0.31352514347525701, -0.89632804754600814, 0.00070250393569232196},
    {-0.31352514347525701, 0.89632804754600814, 0.31352514347525701, 0.00070250393569232196},
    {0.31352514347525701, -0.89632804754600814, 0.31352514347525701, 0.00070250393569232196},
    {0.31352514347525701, 0.89632804754600814, -0.31352514347525701, 0.00070250393569232196},
    {-0.31352514347525701, -0.89632804754600814, 0.31352514347525701, 0.00070250393569232196},
    {-0.31352514347525701, 0.89632804754600814, -0.31352514347525701, 0.00070250393569232196},
    {0.31352514347525701, -0.89632804754600814, -0.31352514347525701, 0.00070250393569232196},
    {-0.31352514347525701, -0.89632804754600814, -0.31352514347525701, 0.00070250393569232196},
    {0.31352514347525701, 0.89632804754600814, 0.31352514347525701, 0.00070250393569232196},
    {0.89632804754600814, 0.31352514347525701, 0.31352514347525701, 0.00070250393569232196},
    {-0.89632804754600814, 0.31352514347525701, 0.31352514347525701, 0.00070250393569232196},
    {0.89632804754600814, -0.31352514347525701, 0.31352514347525701, 0.00070250393569232196},
    {0.89632804754600814, 0.31352514347525701, -0.31352514347525701, 0.00070250393569232196},
    {-0.89632804754600814, -0.31352514347525701, 0.31352514347525701, 0.00070250393569232196},
    {-0.89632804754600814, 0.31352514347525701, -0.31352514347525701, 0.00070250393569232196},
    {0.89632804754600814, -0.31352514347525701, -0.31352514347525701, 0.00070250393569232196},
    {-0.89632804754600814, -0.31352514347525701, -0.31352514347525701, 0.00070250393569232196},
    {0.37215583393753382, 0.37215583393753382, 0.85029410825461882, 0.00072685117892496267},
    {-0.37215583393753382, 0.37215583393753382, 0.85029410825461882, 0.00072685117892496267},
    {0.37215583393753382, -0.37215583393753382, 0.85029410825461882, 0.00072685117892496267},
    {0.37215583393753382, 0.37215583393753382, -0.85029410825461882, 0.00072685117892496267},
    {-0.37215583393753382, -0.37215583393753382, 0.85029410825461882, 0.00072685117892496267},
    {-0.37215583393753382, 0.37215583393753382, -0.85029410825461882, 0.00072685117892496267},
    {0.37215583393753382, -0.37215583393753382, -0.85029410825461882, 0.00072685117892496267},
    {-0.37215583393753382, -0.37215583393753382, -0.85029410825461882, 0.00072685117892496267},
    {-0.37215583393753382, 0.85029410825461882, 0.37215583393753382, 0.00072685117892496267},
    {0.37215583393753382, -0.85029410825461882, 0.37215583393753382, 0.00072685117892496267},
    {0.37215583393753382, 0.85029410825461882, -0.37215583393753382, 0.00072685117892496267},
    {-0.37215583393753382, -0.85029410825461882, 0.37215583393753382, 0.00072685117892496267},
    {-0.37215583393753382, 0.85029410825461882, -0.37215583393753382, 0.00072685117892496267},
    {0.37215583393753382, -0.85029410825461882, -0.37215583393753382, 0.00072685117892496267},
    {-0.37215583393753382, -0.85029410825461882, -0.37215583393753382, 0.00072685117892496267},
    {0.37215583393753382, 0.85029410825461882, 0.37215583393753382, 0.00072685117892496267},
    {0.85029410825461882, 0.37215583393753382, 0.37215583393753382, 0.00072685117892496267},
    {-0.85029410825461882, 0.37215583393753382, 0.37215583393753382, 0.00072685117892496267},
    {0.85029410825461882, -0.37215583393753382, 0.37215583393753382, 0.00072685117892496267},
    {0.85029410825461882, 0.37215583393753382, -0.37215583393753382, 0.00072685117892496267},
    {-0.85029410825461882, -0.37215583393753382, 0.37215583393753382, 0.00072685117892496267},
    {-0.85029410825461882, 0.37215583393753382, -0.37215583393753382, 0.00072685117892496267},
    {0.85029410825461882, -0.37215583393753382, -0.37215583393753382, 0.00072685117892496267},
    {-0.85029410825461882, -0.37215583393753382, -0.37215583393753382, 0.00072685117892496267},
    {0.42868095751956958, 0.42868095751956958, 0.79527685325313602, 0.00074226375342086287},
    {-0.42868095751956958, 0.42868095751956958, 0.79527685325313602, 0.00074226375342086287},
    {0.42868095751956958, -0.42868095751956958, 0.79527685325313602, 0.00074226375342086287},
    {0.42868095751956958, 0.42868095751956958, -0.79527685325313602, 0.00074226375342086287},
    {-0.42868095751956958, -0.42868095751956958, 0.79527685325313602, 0.00074226375342086287},
    {-0.42868095751956958, 0.42868095751956958, -0.79527685325313602, 0.00074226375342086287},
    {0.42868095751956958, -0.42868095751956958, -0.79527685325313602, 0.00074226375342086287},
    {-0.42868095751956958, -0.42868095751956958, -0.79527685325313602, 0.00074226375342086287},
    {-0.42868095751956958, 0.79527685325313602, 0.42868095751956958, 0.00074226375342086287},
    {0.42868095751956958, -0.79527685325313602, 0.42868095751956958, 0.00074226375342086287},
    {0.42868095751956958, 0.79527685325313602, -0.42868095751956958, 0.00074226375342086287},
    {-0.42868095751956958, -0.79527685325313602, 0.42868095751956958, 0.00074226375342086287},
    {-0.42868095751956958, 0.79527685325313602, -0.42868095751956958, 0.00074226375342086287},
    {0.42868095751956958, -0.79527685325313602, -0.42868095751956958, 0.00074226375342086287},
    {-0.42868095751956958, -0.79527685325313602, -0.42868095751956958, 0.00074226375342086287},
    {0.42868095751956958, 0.79527685325313602, 0.42868095751956958, 0.00074226375342086287},
    {0.79527685325313602, 0.42868095751956958, 0.42868095751956958, 0.00074226375342086287},
    {-0.79527685325313602, 0.42868095751956958, 0.42868095751956958, 0.00074226375342086287},
    {0.79527685325313602, -0.42868095751956958, 0.42868095751956958, 0.00074226375342086287},
    {0.79527685325313602, 0.42868095751956958, -0.42868095751956958, 0.00074226375342086287},
    {-0.79527685325313602, -0.42868095751956958, 0.42868095751956958, 0.00074226375342086287},
    {-0.79527685325313602, 0.42868095751956958, -0.42868095751956958, 0.00074226375342086287},
    {0.79527685325313602, -0.42868095751956958, -0.42868095751956958, 0.00074226375342086287},
    {-0.79527685325313602, -0.42868095751956958, -0.42868095751956958, 0.00074226375342086287},
    {0.48225101282829941, 0.48225101282829941, 0.7313466491699806, 0.00075095450358412142},
    {-0.48225101282829941, 0.48225101282829941, 0.7313466491699806, 0.00075095450358412142},
    {0.48225101282829941, -0.48225101282829941, 0.7313466491699806, 0.00075095450358412142},
    {0.48225101282829941, 0.48225101282829941, -0.7313466491699806, 0.00075095450358412142},
    {-0.48225101282829941, -0.48225101282829941, 0.7313466491699806, 0.00075095450358412142},
    {-0.48225101282829941, 0.48225101282829941, -0.7313466491699806, 0.00075095450358412142},
    {0.48225101282829941, -0.48225101282829941, -0.7313466491699806, 0.00075095450358412142},
    {-0.48225101282829941, -0.48225101282829941, -0.7313466491699806, 0.00075095450358412142},
    {-0.48225101282829941, 0.7313466491699806, 0.48225101282829941, 0.00075095450358412142},
    {0.48225101282829941, -0.7313466491699806, 0.48225101282829941, 0.00075095450358412142},
    {0.48225101282829941, 0.7313466491699806, -0.48225101282829941, 0.00075095450358412142},
    {-0.48225101282829941, -0.7313466491699806, 0.48225101282829941, 0.00075095450358412142},
    {-0.48225101282829941, 0.7313466491699806, -0.48225101282829941, 0.00075095450358412142},
    {0.48225101282829941, -0.7313466491699806, -0.48225101282829941, 0.00075095450358412142},
    {-0.48225101282829941, -0.7313466491699806, -0.48225101282829941, 0.00075095450358412142},
    {0.48225101282829941, 0.7313466491699806, 0.48225101282829941, 0.00075095450358412142},
    {0.7313466491699806, 0.48225101282829941, 0.48225101282829941, 0.00075095450358412142},
    {-0.7313466491699806, 0.48225101282829941, 0.48225101282829941, 0.00075095450358412142},
    {0.7313466491699806, -0.48225101282829941, 0.48225101282829941, 0.00075095450358412142},
    {0.7313466491699806, 0.48225101282829941, -0.48225101282829941, 0.00075095450358412142},
    {-0.7313466491699806, -0.48225101282829941, 0.48225101282829941, 0.00075095450358412142},
    {-0.7313466491699806, 0.48225101282829941, -0.48225101282829941, 0.00075095450358412142},
    {0.7313466491699806, -0.48225101282829941, -0.48225101282829941, 0.00075095450358412142},
    {-0.7313466491699806, -0.48225101282829941, -0.48225101282829941, 0.00075095450358412142},
    {0.53206793335662628, 0.53206793335662628, 0.65864059136012676, 0.00075485350577184009},
    {-0.53206793335662628, 0.53206793335662628, 0.65864059136012676, 0.00075485350577184009},
    {0.53206793335662628, -0.53206793335662628, 0.65864059136012676, 0.00075485350577184009},
    {0.53206793335662628, 0.53206793335662628, -0.65864059136012676, 0.00075485350577184009},
    {-0.53206793335662628, -0.53206793335662628, 0.65864059136012676, 0.00075485350577184009},
    {-0.53206793335662628, 0.53206793335662628, -0.65864059136012676, 0.00075485350577184009},
    {0.53206793335662628, -0.53206793335662628, -0.65864059136012676, 0.00075485350577184009},
    {-0.53206793335662628, -0.53206793335662628, -0.65864059136012676, 0.00075485350577184009},
    {-0.53206793335662628, 0.65864059136012676, 0.53206793335662628, 0.00075485350577184009},
    {0.53206793335662628, -0.65864059136012676, 0.53206793335662628, 0.00075485350577184009},
    {0.53206793335662628, 0.65864059136012676, -0.53206793335662628, 0.00075485350577184009},
    {-0.53206793335662628, -0.65864059136012676, 0.53206793335662628, 0.00075485350577184009},
    {-0.53206793335662628, 0.65864059136012676, -0.53206793335662628, 0.00075485350577184009},
    {0.53206793335662628, -0.65864059136012676, -0.53206793335662628, 0.00075485350577184009},
    {-0.53206793335662628, -0.65864059136012676, -0.53206793335662628, 0.00075485350577184009},
    {0.53206793335662628, 0.65864059136012676, 0.53206793335662628, 0.00075485350577184009},
    {0.65864059136012676, 0.53206793335662628, 0.53206793335662628, 0.00075485350577184009},
    {-0.65864059136012676, 0.53206793335662628, 0.53206793335662628, 0.00075485350577184009},
    {0.65864059136012676, -0.53206793335662628, 0.53206793335662628, 0.00075485350577184009},
    {0.65864059136012676, 0.53206793335662628, -0.53206793335662628, 0.00075485350577184009},
    {-0.65864059136012676, -0.53206793335662628, 0.53206793335662628, 0.00075485350577184009},
    {-0.65864059136012676, 0.53206793335662628, -0.53206793335662628, 0.00075485350577184009},
    {0.65864059136012676, -0.53206793335662628, -0.53206793335662628, 0.00075485350577184009},
    {-0.65864059136012676, -0.53206793335662628, -0.53206793335662628, 0.00075485350577184009},
    {0.61729981953942736, 0.61729981953942736, 0.48773134571522136, 0.00075540889697740018},
    {-0.61729981953942736, 0.61729981953942736, 0.48773134571522136, 0.00075540889697740018},
    {0.61729981953942736, -0.61729981953942736, 0.48773134571522136, 0.00075540889697740018},
    {0.61729981953942736, 0.61729981953942736, -0.48773134571522136, 0.00075540889697740018},
    {-0.61729981953942736, -0.61729981953942736, 0.48773134571522136, 0.00075540889697740018},
    {-0.61729981953942736, 0.61729981953942736, -0.48773134571522136, 0.00075540889697740018},
    {0.61729981953942736, -0.61729981953942736, -0.48773134571522136, 0.00075540889697740018},
    {-0.61729981953942736, -0.61729981953942736, -0.48773134571522136, 0.00075540889697740018},
    {-0.61729981953942736, 0.48773134571522136, 0.61729981953942736, 0.00075540889697740018},
    {0.61729981953942736, -0.48773134571522136, 0.61729981953942736, 0.00075540889697740018},
    {0.61729981953942736, 0.48773134571522136, -0.61729981953942736, 0.00075540889697740018},
    {-0.61729981953942736, -0.48773134571522136, 0.61729981953942736, 0.00075540889697740018},
    {-0.61729981953942736, 0.48773134571522136, -0.61729981953942736, 0.00075540889697740018},
    {0.61729981953942736, -0.48773134571522136, -0.61729981953942736, 0.00075540889697740018},
    {-0.61729981953942736, -0.48773134571522136, -0.61729981953942736, 0.00075540889697740018},
    {0.61729981953942736, 0.48773134571522136, 0.61729981953942736, 0.00075540889697740018},
    {0.48773134571522136, 0.61729981953942736, 0.61729981953942736, 0.00075540889697740018},
    {-0.48773134571522136, 0.61729981953942736, 0.61729981953942736, 0.00075540889697740018},
    {0.48773134571522136, -0.61729981953942736, 0.61729981953942736, 0.00075540889697740018},
    {0.48773134571522136, 0.61729981953942736, -0.61729981953942736, 0.00075540889697740018},
    {-0.48773134571522136, -0.61729981953942736, 0.61729981953942736, 0.00075540889697740018},
    {-0.48773134571522136, 0.61729981953942736, -0.61729981953942736, 0.00075540889697740018},
    {0.48773134571522136, -0.61729981953942736, -0.61729981953942736, 0.00075540889697740018},
    {-0.48773134571522136, -0.61729981953942736, -0.61729981953942736, 0.00075540889697740018},
    {0.65106798491274809, 0.65106798491274809, 0.39015504359588543, 0.00075531471744428084},
    {-0.65106798491274809, 0.65106798491274809, 0.39015504359588543, 0.00075531471744428084},
    {0.65106798491274809, -0.65106798491274809, 0.39015504359588543, 0.00075531471744428084},
    {0.65106798491274809, 0.65106798491274809, -0.39015504359588543, 0.00075531471744428084},
    {-0.65106798491274809, -0.65106798491274809, 0.39015504359588543, 0.00075531471744428084},
    {-0.65106798491274809, 0.65106798491274809, -0.39015504359588543, 0.00075531471744428084},
    {0.65106798491274809, -0.65106798491274809, -0.39015504359588543, 0.00075531471744428084},
    {-0.65106798491274809, -0.65106798491274809, -0.39015504359588543, 0.00075531471744428084},
    {-0.65106798491274809, 0.39015504359588543, 0.65106798491274809, 0.00075531471744428084},
    {0.65106798491274809, -0.39015504359588543, 0.65106798491274809, 0.00075531471744428084},
    {0.65106798491274809, 0.39015504359588543, -0.65106798491274809, 0.00075531471744428084},
    {-0.65106798491274809, -0.39015504359588543, 0.65106798491274809, 0.00075531471744428084},
    {-0.65106798491274809, 0.39015504359588543, -0.65106798491274809, 0.00075531471744428084},
    {0.65106798491274809, -0.39015504359588543, -0.65106798491274809, 0.00075531471744428084},
    {-0.65106798491274809, -0.39015504359588543, -0.65106798491274809, 0.00075531471744428084},
    {0.65106798491274809, 0.39015504359588543, 0.65106798491274809, 0.00075531471744428084},
    {0.39015504359588543, 0.65106798491274809, 0.65106798491274809, 0.00075531471744428084},
    {-0.39015504359588543, 0.65106798491274809, 0.65106798491274809, 0.00075531471744428084},
    {0.39015504359588543, -0.65106798491274809, 0.65106798491274809, 0.00075531471744428084},
    {0.39015504359588543, 0.65106798491274809, -0.65106798491274809, 0.00075531471744428084},
    {-0.39015504359588543, -0.65106798491274809, 0.65106798491274809, 0.00075531471744428084},
    {-0.39015504359588543, 0.65106798491274809, -0.65106798491274809, 0.00075531471744428084},
    {0.39015504359588543, -0.65106798491274809, -0.65106798491274809, 0.00075531471744428084},
    {-0.39015504359588543, -0.65106798491274809, -0.65106798491274809, 0.00075531471744428084},
    {0.67773152516873603, 0.67773152516873603, 0.28523667293130073, 0.00075647676532922964},
    {-0.67773152516873603, 0.67773152516873603, 0.28523667293130073, 0.00075647676532922964},
    {0.67773152516873603, -0.67773152516873603, 0.28523667293130073, 0.00075647676532922964},
    {0.67773152516873603, 0.67773152516873603, -0.28523667293130073, 0.00075647676532922964},
    {-0.67773152516873603, -0.67773152516873603, 0.28523667293130073, 0.00075647676532922964},
    {-0.67773152516873603, 0.67773152516873603, -0.28523667293130073, 0.00075647676532922964},
    {0.67773152516873603, -0.67773152516873603, -0.28523667293130073, 0.00075647676532922964},
    {-0.67773152516873603, -0.67773152516873603, -0.28523667293130073, 0.00075647676532922964},
    {-0.67773152516873603, 0.28523667293130073, 0.67773152516873603, 0.00075647676532922964},
    {0.67773152516873603, -0.28523667293130073, 0.67773152516873603, 0.00075647676532922964},
    {0.67773152516873603, 0.28523667293130073, -0.67773152516873603, 0.00075647676532922964},
    {-0.67773152516873603, -0.28523667293130073, 0.67773152516873603, 0.00075647676532922964},
    {-0.67773152516873603, 0.28523667293130073, -0.67773152516873603, 0.00075647676532922964},
    {0.67773152516873603, -0.28523667293130073, -0.67773152516873603, 0.00075647676532922964},
    {-0.67773152516873603, -0.28523667293130073, -0.67773152516873603, 0.00075647676532922964},
    {0.67773152516873603, 0.28523667293130073, 0.67773152516873603, 0.00075647676532922964},
    {0.28523667293130073, 0.67773152516873603, 0.67773152516873603, 0.00075647676532922964},
    {-0.28523667293130073, 0.67773152516873603, 0.67773152516873603, 0.00075647676532922964},
    {0.28523667293130073, -0.67773152516873603, 0.67773152516873603, 0.00075647676532922964},
    {0.28523667293130073, 0.67773152516873603, -0.67773152516873603, 0.00075647676532922964},
    {-0.28523667293130073, -0.67773152516873603, 0.67773152516873603, 0.00075647676532922964},
    {-0.28523667293130073, 0.67773152516873603, -0.67773152516873603, 0.00075647676532922964},
    {0.28523667293130073, -0.67773152516873603, -0.67773152516873603, 0.00075647676532922964},
    {-0.28523667293130073, -0.67773152516873603, -0.67773152516873603, 0.00075647676532922964},
    {0.69631094106487412, 0.69631094106487412, 0.17407511799995667, 0.00075879918085187297},
    {-0.69631094106487412, 0.69631094106487412, 0.17407511799995667, 0.00075879918085187297},
    {0.69631094106487412, -0.69631094106487412, 0.17407511799995667, 0.00075879918085187297},
    {0.69631094106487412, 0.69631094106487412, -0.17407511799995667, 0.00075879918085187297},
    {-0.69631094106487412, -0.69631094106487412, 0.17407511799995667, 0.00075879918085187297},
    {-0.69631094106487412, 0.69631094106487412, -0.17407511799995667, 0.00075879918085187297},
    {0.69631094106487412, -0.69631094106487412, -0.17407511799995667, 0.00075879918085187297},
    {-0.69631094106487412, -0.69631094106487412, -0.17407511799995667, 0.00075879918085187297},
    {-0.69631094106487412, 0.17407511799995667, 0.69631094106487412, 0.00075879918085187297},
    {0.69631094106487412, -0.17407511799995667, 0.69631094106487412, 0.00075879918085187297},
    {0.69631094106487412, 0.17407511799995667, -0.69631094106487412, 0.00075879918085187297},
    {-0.69631094106487412, -0.17407511799995667, 0.69631094106487412, 0.00075879918085187297},
    {-0.69631094106487412, 0.17407511799995667, -0.69631094106487412, 0.00075879918085187297},
    {0.69631094106487412, -0.17407511799995667, -0.69631094106487412, 0.00075879918085187297},
    {-0.69631094106487412, -0.17407511799995667, -0.69631094106487412, 0.00075879918085187297},
    {0.69631094106487412, 0.17407511799995667, 0.69631094106487412, 0.00075879918085187297},
    {0.17407511799995667, 0.69631094106487412, 0.69631094106487412, 0.00075879918085187297},
    {-0.17407511799995667, 0.69631094106487412, 0.69631094106487412, 0.00075879918085187297},
    {0.17407511799995667, -0.69631094106487412, 0.69631094106487412, 0.00075879918085187297},
    {0.17407511799995667, 0.69631094106487412, -0.69631094106487412, 0.00075879918085187297},
    {-0.17407511799995667, -0.69631094106487412, 0.69631094106487412, 0.00075879918085187297},
    {-0.17407511799995667, 0.69631094106487412, -0.69631094106487412, 0.00075879918085187297},
    {0.17407511799995667, -0.69631094106487412, -0.69631094106487412, 0.00075879918085187297},
    {-0.17407511799995667, -0.69631094106487412, -0.69631094106487412, 0.00075879918085187297},
    {0.70589350098317494, 0.70589350098317494, 0.058555363028785182, 0.00076082618320330283},
    {-0.70589350098317494, 0.70589350098317494, 0.058555363028785182, 0.00076082618320330283},
    {0.70589350098317494, -0.70589350098317494, 0.058555363028785182, 0.00076082618320330283},
    {0.70589350098317494, 0.70589350098317494, -0.058555363028785182, 0.00076082618320330283},
    {-0.70589350098317494, -0.70589350098317494, 0.058555363028785182, 0.00076082618320330283},
    {-0.70589350098317494, 0.70589350098317494, -0.058555363028785182, 0.00076082618320330283},
    {0.70589350098317494, -0.70589350098317494, -0.058555363028785182, 0.00076082618320330283},
    {-0.70589350098317494, -0.70589350098317494, -0.058555363028785182, 0.00076082618320330283},
    {-0.70589350098317494, 0.058555363028785182, 0.70589350098317494, 0.00076082618320330283},
    {0.70589350098317494, -0.058555363028785182, 0.70589350098317494, 0.00076082618320330283},
    {0.70589350098317494, 0.058555363028785182, -0.70589350098317494, 0.00076082618320330283},
    {-0.70589350098317494, -0.058555363028785182, 0.70589350098317494, 0.00076082618320330283},
    {-0.70589350098317494, 0.058555363028785182, -0.70589350098317494, 0.00076082618320330283},
    {0.70589350098317494, -0.058555363028785182, -0.70589350098317494, 0.00076082618320330283},
    {-0.70589350098317494, -0.058555363028785182, -0.70589350098317494, 0.00076082618320330283},
    {0.70589350098317494, 0.058555363028785182, 0.70589350098317494, 0.00076082618320330283},
    {0.058555363028785182, 0.70589350098317494, 0.70589350098317494, 0.00076082618320330283},
    {-0.058555363028785182, 0.70589350098317494, 0.70589350098317494, 0.00076082618320330283},
    {0.058555363028785182, -0.70589350098317494, 0.70589350098317494, 0.00076082618320330283},
    {0.058555363028785182, 0.70589350098317494, -0.70589350098317494, 0.00076082618320330283},
    {-0.058555363028785182, -0.70589350098317494, 0.70589350098317494, 0.00076082618320330283},
    {-0.058555363028785182, 0.70589350098317494, -0.70589350098317494, 0.00076082618320330283},
    {0.058555363028785182, -0.70589350098317494, -0.70589350098317494, 0.00076082618320330283},
    {-0.058555363028785182, -0.70589350098317494, -0.70589350098317494, 0.00076082618320330283},
    {0.99555461940918566, 0.094185985013862425, 0, 0.00040216804478749164},
    {-0.99555461940918566, 0.094185985013862425, 0, 0.00040216804478749164},
    {0.99555461940918566, -0.094185985013862425, 0, 0.00040216804478749164},
    {-0.99555461940918566, -0.094185985013862425, 0, 0.00040216804478749164},
    {0.094185985013862425, 0.99555461940918566, 0, 0.00040216804478749164},
    {-0.094185985013862425, 0.99555461940918566, 0, 0.00040216804478749164},
    {0.094185985013862425, -0.99555461940918566, 0, 0.00040216804478749164},
    {-0.094185985013862425, -0.99555461940918566, 0, 0.00040216804478749164},
    {0.99555461940918566, 0, 0.094185985013862425, 0.00040216804478749164},
    {-0.99555461940918566, 0, 0.094185985013862425, 0.00040216804478749164},
    {0.99555461940918566, 0, -0.094185985013862425, 0.00040216804478749164},
    {-0.99555461940918566, 0, -0.094185985013862425, 0.00040216804478749164},
    {0.094185985013862425, 0, 0.99555461940918566, 0.00040216804478749164},
    {-0.094185985013862425, 0, 0.99555461940918566, 0.00040216804478749164},
    {0.094185985013862425, 0, -0.99555461940918566, 0.00040216804478749164},
    {-0.094185985013862425, 0, -0.99555461940918566, 0.00040216804478749164},
    {0, 0.99555461940918566, 0.094185985013862425, 0.00040216804478749164},
    {0, -0.99555461940918566, 0.094185985013862425, 0.00040216804478749164},
    {0, 0.99555461940918566, -0.094185985013862425, 0.00040216804478749164},
    {0, -0.99555461940918566, -0.094185985013862425, 0.00040216804478749164},
    {0, 0.094185985013862425, 0.99555461940918566, 0.00040216804478749164},
    {0, -0.094185985013862425, 0.99555461940918566, 0.00040216804478749164},
    {0, 0.094185985013862425, -0.99555461940918566, 0.00040216804478749164},
    {0, -0.094185985013862425, -0.99555461940918566, 0.00040216804478749164},
    {0.97341159017942092, 0.22906303958598634, 0, 0.00058048717939459637},
    {-0.97341159017942092, 0.22906303958598634, 0, 0.00058048717939459637},
    {0.97341159017942092, -0.22906303958598634, 0, 0.00058048717939459637},
    {-0.97341159017942092, -0.22906303958598634, 0, 0.00058048717939459637},
    {0.22906303958598634, 0.97341159017942092, 0, 0.00058048717939459637},
    {-0.22906303958598634, 0.97341159017942092, 0, 0.00058048717939459637},
    {0.22906303958598634, -0.97341159017942092, 0, 0.00058048717939459637},
    {-0.22906303958598634, -0.97341159017942092, 0, 0.00058048717939459637},
    {0.97341159017942092, 0, 0.22906303958598634, 0.00058048717939459637},
    {-0.97341159017942092, 0, 0.22906303958598634, 0.00058048717939459637},
    {0.97341159017942092, 0, -0.22906303958598634, 0.00058048717939459637},
    {-0.97341159017942092, 0, -0.22906303958598634, 0.00058048717939459637},
    {0.22906303958598634, 0, 0.97341159017942092, 0.00058048717939459637},
    {-0.22906303958598634, 0, 0.97341159017942092, 0.00058048717939459637},
    {0.22906303958598634, 0, -0.97341159017942092, 0.00058048717939459637},
    {-0.22906303958598634, 0, -0.97341159017942092, 0.00058048717939459637},
    {0, 0.97341159017942092, 0.22906303958598634, 0.00058048717939459637},
    {0, -0.97341159017942092, 0.22906303958598634, 0.00058048717939459637},
    {0, 0.97341159017942092, -0.22906303958598634, 0.00058048717939459637},
    {0, -0.97341159017942092, -0.22906303958598634, 0.00058048717939459637},
    {0, 0.22906303958598634, 0.97341159017942092, 0.00058048717939459637},
    {0, -0.22906303958598634, 0.97341159017942092, 0.00058048717939459637},
    {0, 0.22906303958598634, -0.97341159017942092, 0.00058048717939459637},
    {0, -0.22906303958598634, -0.97341159017942092, 0.00058048717939459637},
    {0.92756937323886257, 0.37365098398005542, 0, 0.00067921519559451589},
    {-0.92756937323886257, 0.37365098398005542, 0, 0.00067921519559451589},
    {0.92756937323886257, -0.37365098398005542, 0, 0.00067921519559451589},
    {-0.92756937323886257, -0.37365098398005542, 0, 0.00067921519559451589},
    {0.37365098398005542, 0.92756937323886257, 0, 0.00067921519559451589},
    {-0.37365098398005542, 0.92756937323886257, 0, 0.00067921519559451589},
    {0.37365098398005542, -0.92756937323886257, 0, 0.00067921519559451589},
    {-0.37365098398005542, -0.92756937323886257, 0, 0.00067921519559451589},
    {0.92756937323886257, 0, 0.37365098398005542, 0.00067921519559451589},
    {-0.92756937323886257, 0, 0.37365098398005542, 0.00067921519559451589},
    {0.92756937323886257, 0, -0.37365098398005542, 0.00067921519559451589},
    {-0.92756937323886257, 0, -0.37365098398005542, 0.00067921519559451589},
    {0.37365098398005542, 0, 0.92756937323886257, 0.00067921519559451589},
    {-0.37365098398005542, 0, 0.92756937323886257, 0.00067921519559451589},
    {0.37365098398005542, 0, -0.92756937323886257, 0.00067921519559451589},
    {-0.37365098398005542, 0, -0.92756937323886257, 0.00067921519559451589},
    {0, 0.92756937323886257, 0.37365098398005542, 0.00067921519559451589},
    {0, -0.92756937323886257, 0.37365098398005542, 0.00067921519559451589},
    {0, 0.92756937323886257, -0.37365098398005542, 0.00067921519559451589},
    {0, -0.92756937323886257, -0.37365098398005542, 0.00067921519559451589},
    {0, 0.37365098398005542, 0.92756937323886257, 0.00067921519559451589},
    {0, -0.37365098398005542, 0.92756937323886257, 0.00067921519559451589},
    {0, 0.37365098398005542, -0.92756937323886257, 0.00067921519559451589},
    {0, -0.37365098398005542, -0.92756937323886257, 0.00067921519559451589},
    {0.8568022422795103, 0.51564514700014707, 0, 0.00073367412112862939},
    {-0.8568022422795103, 0.51564514700014707, 0, 0.00073367412112862939},
    {0.8568022422795103, -0.51564514700014707, 0, 0.00073367412112862939},
    {-0.8568022422795103, -0.51564514700014707, 0, 0.00073367412112862939},
    {0.51564514700014707, 0.8568022422795103, 0, 0.00073367412112862939},
    {-0.51564514700014707, 0.8568022422795103, 0, 0.00073367412112862939},
    {0.51564514700014707, -0.8568022422795103, 0, 0.00073367412112862939},
    {-0.51564514700014707, -0.8568022422795103, 0, 0.00073367412112862939},
    {0.8568022422795103, 0, 0.51564514700014707, 0.00073367412112862939},
    {-0.8568022422795103, 0, 0.51564514700014707, 0.00073367412112862939},
    {0.8568022422795103, 0, -0.51564514700014707, 0.00073367412112862939},
    {-0.8568022422795103, 0, -0.51564514700014707, 0.00073367412112862939},
    {0.51564514700014707, 0, 0.8568022422795103, 0.00073367412112862939},
    {-0.51564514700014707, 0, 0.8568022422795103, 0.00073367412112862939},
    {0.51564514700014707, 0, -0.8568022422795103, 0.00073367412112862939},
    {-0.51564514700014707, 0, -0.8568022422795103, 0.00073367412112862939},
    {0, 0.8568022422795103, 0.51564514700014707, 0.00073367412112862939},
    {0, -0.8568022422795103, 0.51564514700014707, 0.00073367412112862939},
    {0, 0.8568022422795103, -0.51564514700014707, 0.00073367412112862939},
    {0, -0.8568022422795103, -0.51564514700014707, 0.00073367412112862939},
    {0, 0.51564514700014707, 0.8568022422795103, 0.00073367412112862939},
    {0, -0.51564514700014707, 0.8568022422795103, 0.00073367412112862939},
    {0, 0.51564514700014707, -0.8568022422795103, 0.00073367412112862939},
    {0, -0.51564514700014707, -0.8568022422795103, 0.00073367412112862939},
    {0.76234955537193716, 0.64716547762083976, 0, 0.00075818663009896085},
    {-0.76234955537193716, 0.64716547762083976, 0, 0.00075818663009896085},
    {0.76234955537193716, -0.64716547762083976, 0, 0.00075818663009896085},
    {-0.76234955537193716, -0.64716547762083976, 0, 0.00075818663009896085},
    {0.64716547762083976, 0.76234955537193716, 0, 0.00075818663009896085},
    {-0.64716547762083976, 0.76234955537193716, 0, 0.00075818663009896085},
    {0.64716547762083976, -0.76234955537193716, 0, 0.00075818663009896085},
    {-0.64716547762083976, -0.76234955537193716, 0, 0.00075818663009896085},
    {0.76234955537193716, 0, 0.64716547762083976, 0.00075818663009896085},
    {-0.76234955537193716, 0, 0.64716547762083976, 0.00075818663009896085},
    {0.76234955537193716, 0, -0.64716547762083976, 0.00075818663009896085},
    {-0.76234955537193716, 0, -0.64716547762083976, 0.00075818663009896085},
    {0.64716547762083976, 0, 0.76234955537193716, 0.00075818663009896085},
    {-0.64716547762083976, 0, 0.76234955537193716, 0.00075818663009896085},
    {0.64716547762083976, 0, -0.76234955537193716, 0.00075818663009896085},
    {-0.64716547762083976, 0, -0.76234955537193716, 0.00075818663009896085},
    {0, 0.76234955537193716, 0.64716547762083976, 0.00075818663009896085},
    {0, -0.76234955537193716, 0.64716547762083976, 0.00075818663009896085},
    {0, 0.76234955537193716, -0.64716547762083976, 0.00075818663009896085},
    {0, -0.76234955537193716, -0.64716547762083976, 0.00075818663009896085},
    {0, 0.64716547762083976, 0.76234955537193716, 0.00075818663009896085},
    {0, -0.64716547762083976, 0.76234955537193716, 0.00075818663009896085},
    {0, 0.64716547762083976, -0.76234955537193716, 0.00075818663009896085},
    {0, -0.64716547762083976, -0.76234955537193716, 0.00075818663009896085},
    {0.5707522908892223, 0.43870280398895012, 0.69410494323044358, 0.00075382578598007428},
    {-0.5707522908892223, 0.43870280398895012, 0.69410494323044358, 0.00075382578598007428},
    {0.5707522908892223, -0.43870280398895012, 0.69410494323044358, 0.00075382578598007428},
    {0.5707522908892223, 0.43870280398895012, -0.69410494323044358, 0.00075382578598007428},
    {-0.5707522908892223, -0.43870280398895012, 0.69410494323044358, 0.00075382578598007428},
    {0.5707522908892223, -0.43870280398895012, -0.69410494323044358, 0.00075382578598007428},
    {-0.5707522908892223, 0.43870280398895012, -0.69410494323044358, 0.00075382578598007428},
    {-0.5707522908892223, -0.43870280398895012, -0.69410494323044358, 0.00075382578598007428},
    {0.43870280398895012, 0.5707522908892223, 0.69410494323044358, 0.00075382578598007428},
    {-0.43870280398895012, 0.5707522908892223, 0.69410494323044358, 0.00075382578598007428},
    {0.43870280398895012, -0.5707522908892223, 0.69410494323044358, 0.00075382578598007428},
    {0.43870280398895012, 0.5707522908892223, -0.69410494323044358, 0.00075382578598007428},
    {-0.43870280398895012, -0.5707522908892223, 0.69410494323044358, 0.00075382578598007428},
    {0.43870280398895012, -0.5707522908892223, -0.69410494323044358, 0.00075382578598007428},
    {-0.43870280398895012, 0.5707522908892223, -0.69410494323044358, 0.00075382578598007428},
    {-0.43870280398895012, -0.5707522908892223, -0.69410494323044358, 0.00075382578598007428},
    {0.69410494323044358, 0.5707522908892223, 0.43870280398895012, 0.00075382578598007428},
    {-0.69410494323044358, 0.5707522908892223, 0.43870280398895012, 0.00075382578598007428},
    {0.69410494323044358, -0.5707522908892223, 0.43870280398895012, 0.00075382578598007428},
    {0.69410494323044358, 0.5707522908892223, -0.43870280398895012, 0.00075382578598007428},
    {-0.69410494323044358, -0.5707522908892223, 0.43870280398895012, 0.00075382578598007428},
    {0.69410494323044358, -0.5707522908892223, -0.43870280398895012, 0.00075382578598007428},
    {-0.69410494323044358, 0.5707522908892223, -0.43870280398895012, 0.00075382578598007428},
    {-0.69410494323044358, -0.5707522908892223, -0.43870280398895012, 0.00075382578598007428},
    {0.69410494323044358, 0.43870280398895012, 0.5707522908892223, 0.00075382578598007428},
    {-0.69410494323044358, 0.43870280398895012, 0.5707522908892223, 0.00075382578598007428},
    {0.69410494323044358, -0.43870280398895012, 0.5707522908892223, 0.00075382578598007428},
    {0.69410494323044358, 0.43870280398895012, -0.5707522908892223, 0.00075382578598007428},
    {-0.69410494323044358, -0.43870280398895012, 0.5707522908892223, 0.00075382578598007428},
    {0.69410494323044358, -0.43870280398895012, -0.5707522908892223, 0.00075382578598007428},
    {-0.69410494323044358, 0.43870280398895012, -0.5707522908892223, 0.00075382578598007428},
    {-0.69410494323044358, -0.43870280398895012, -0.5707522908892223, 0.00075382578598007428},
    {0.5707522908892223, 0.69410494323044358, 0.43870280398895012, 0.00075382578598007428},
    {-0.5707522908892223, 0.69410494323044358, 0.43870280398895012, 0.00075382578598007428},
    {0.5707522908892223, -0.69410494323044358, 0.43870280398895012, 0.00075382578598007428},
    {0.5707522908892223, 0.69410494323044358, -0.43870280398895012, 0.00075382578598007428},
    {-0.5707522908892223, -0.69410494323044358, 0.43870280398895012, 0.00075382578598007428},
    {0.5707522908892223, -0.69410494323044358, -0.43870280398895012, 0.00075382578598007428},
    {-0.5707522908892223, 0.69410494323044358, -0.43870280398895012, 0.00075382578598007428},
    {-0.5707522908892223, -0.69410494323044358, -0.43870280398895012, 0.00075382578598007428},
    {0.43870280398895012, 0.69410494323044358, 0.5707522908892223, 0.00075382578598007428},
    {-0.43870280398895012, 0.69410494323044358, 0.5707522908892223, 0.00075382578598007428},
    {0.43870280398895012, -0.69410494323044358, 0.5707522908892223, 0.00075382578598007428},
    {0.43870280398895012, 0.69410494323044358, -0.5707522908892223, 0.00075382578598007428},
    {-0.43870280398895012, -0.69410494323044358, 0.5707522908892223, 0.00075382578598007428},
    {0.43870280398895012, -0.69410494323044358, -0.5707522908892223, 0.00075382578598007428},
    {-0.43870280398895012, 0.69410494323044358, -0.5707522908892223, 0.00075382578598007428},
    {-0.43870280398895012, -0.69410494323044358, -0.5707522908892223, 0.00075382578598007428},
    {0.51964633884030831, 0.38589084147626168, 0.76227025456501074, 0.00074835172470531233},
    {-0.51964633884030831, 0.38589084147626168, 0.76227025456501074, 0.00074835172470531233},
    {0.51964633884030831, -0.38589084147626168, 0.76227025456501074, 0.00074835172470531233},
    {0.51964633884030831, 0.38589084147626168, -0.76227025456501074, 0.00074835172470531233},
    {-0.51964633884030831, -0.38589084147626168, 0.76227025456501074, 0.00074835172470531233},
    {0.51964633884030831, -0.38589084147626168, -0.76227025456501074, 0.00074835172470531233},
    {-0.51964633884030831, 0.38589084147626168, -0.76227025456501074, 0.00074835172470531233},
    {-0.51964633884030831, -0.38589084147626168, -0.76227025456501074, 0.00074835172470531233},
    {0.38589084147626168, 0.51964633884030831, 0.76227025456501074, 0.00074835172470531233},
    {-0.38589084147626168, 0.51964633884030831, 0.76227025456501074, 0.00074835172470531233},
    {0.38589084147626168, -0.51964633884030831, 0.76227025456501074, 0.00074835172470531233},
    {0.38589084147626168, 0.51964633884030831, -0.76227025456501074, 0.00074835172470531233},
    {-0.38589084147626168, -0.51964633884030831, 0.76227025456501074, 0.00074835172470531233},
    {0.38589084147626168, -0.51964633884030831, -0.76227025456501074, 0.00074835172470531233},
    {-0.38589084147626168, 0.51964633884030831, -0.76227025456501074, 0.00074835172470531233},
    {-0.38589084147626168, -0.51964633884030831, -0.76227025456501074, 0.00074835172470531233},
    {0.76227025456501074, 0.51964633884030831, 0.38589084147626168, 0.00074835172470531233},
    {-0.76227025456501074, 0.51964633884030831, 0.38589084147626168, 0.00074835172470531233},
    {0.76227025456501074, -0.51964633884030831, 0.38589084147626168, 0.00074835172470531233},
    {0.76227025456501074, 0.51964633884030831, -0.38589084147626168, 0.00074835172470531233},
    {-0.76227025456501074, -0.51964633884030831, 0.38589084147626168, 0.00074835172470531233},
    {0.76227025456501074, -0.51964633884030831, -0.38589084147626168, 0.00074835172470531233},
    {-0.76227025456501074, 0.51964633884030831, -0.38589084147626168, 0.00074835172470531233},
    {-0.76227025456501074, -0.51964633884030831, -0.38589084147626168, 0.00074835172470531233},
    {0.76227025456501074, 0.38589084147626168, 0.51964633884030831, 0.00074835172470531233},
    {-0.76227025456501074, 0.38589084147626168, 0.51964633884030831, 0.00074835172470531233},
    {0.76227025456501074, -0.38589084147626168, 0.51964633884030831, 0.00074835172470531233},
    {0.76227025456501074, 0.38589084147626168, -0.51964633884030831, 0.00074835172470531233},
    {-0.76227025456501074, -0.38589084147626168, 0.51964633884030831, 0.00074835172470531233},
    {0.76227025456501074, -0.38589084147626168, -0.51964633884030831, 0.00074835172470531233},
    {-0.76227025456501074, 0.38589084147626168, -0.51964633884030831, 0.00074835172470531233},
    {-0.76227025456501074, -0.38589084147626168, -0.51964633884030831, 0.00074835172470531233},
    {0.51964633884030831, 0.76227025456501074, 0.38589084147626168, 0.00074835172470531233},
    {-0.51964633884030831, 0.76227025456501074, 0.38589084147626168, 0.00074835172470531233},
    {0.51964633884030831, -0.76227025456501074, 0.38589084147626168, 0.00074835172470531233},
    {0.51964633884030831, 0.76227025456501074, -0.38589084147626168, 0.00074835172470531233},
    {-0.51964633884030831, -0.76227025456501074, 0.38589084147626168, 0.00074835172470531233},
    {0.51964633884030831, -0.76227025456501074, -0.38589084147626168, 0.00074835172470531233},
    {-0.51964633884030831, 0.76227025456501074, -0.38589084147626168, 0.00074835172470531233},
    {-0.51964633884030831, -0.76227025456501074, -0.38589084147626168, 0.00074835172470531233},
    {0.38589084147626168, 0.76227025456501074, 0.51964633884030831, 0.00074835172470531233},
    {-0.38589084147626168, 0.76227025456501074, 0.51964633884030831, 0.00074835172470531233},
    {0.38589084147626168, -0.76227025456501074, 0.51964633884030831, 0.00074835172470531233},
    {0.38589084147626168, 0.76227025456501074, -0.51964633884030831, 0.00074835172470531233},
    {-0.38589084147626168, -0.76227025456501074, 0.51964633884030831, 0.00074835172470531233},
    {0.38589084147626168, -0.76227025456501074, -0.51964633884030831, 0.00074835172470531233},
    {-0.38589084147626168, 0.76227025456501074, -0.51964633884030831, 0.00074835172470531233},
    {-0.38589084147626168, -0.76227025456501074, -0.51964633884030831, 0.00074835172470531233},
    {0.4646337531215351, 0.33019373723438539, 0.82163712875659778, 0.00073717636611120589},
    {-0.4646337531215351, 0.33019373723438539, 0.82163712875659778, 0.00073717636611120589},
    {0.4646337531215351, -0.33019373723438539, 0.82163712875659778, 0.00073717636611120589},
    {0.4646337531215351, 0.33019373723438539, -0.82163712875659778, 0.00073717636611120589},
    {-0.4646337531215351, -0.33019373723438539, 0.82163712875659778, 0.00073717636611120589},
    {0.4646337531215351, -0.33019373723438539, -0.82163712875659778, 0.00073717636611120589},
    {-0.4646337531215351, 0.33019373723438539, -0.82163712875659778, 0.00073717636611120589},
    {-0.4646337531215351, -0.33019373723438539, -0.82163712875659778, 0.00073717636611120589},
    {0.33019373723438539, 0.4646337531215351, 0.82163712875659778, 0.00073717636611120589},
    {-0.33019373723438539, 0.4646337531215351, 0.82163712875659778, 0.00073717636611120589},
    {0.33019373723438539, -0.4646337531215351, 0.82163712875659778, 0.00073717636611120589},
    {0.33019373723438539, 0.4646337531215351, -0.82163712875659778, 0.00073717636611120589},
    {-0.33019373723438539, -0.4646337531215351, 0.82163712875659778, 0.00073717636611120589},
    {0.33019373723438539, -0.4646337531215351, -0.82163712875659778, 0.00073717636611120589},
    {-0.33019373723438539, 0.4646337531215351, -0.82163712875659778, 0.00073717636611120589},
    {-0.33019373723438539, -0.4646337531215351, -0.82163712875659778, 0.00073717636611120589},
    {0.82163712875659778, 0.4646337531215351, 0.33019373723438539, 0.00073717636611120589},
    {-0.82163712875659778, 0.4646337531215351, 0.33019373723438539, 0.00073717636611120589},
    {0.82163712875659778, -0.4646337531215351, 0.33019373723438539, 0.00073717636611120589},
    {0.82163712875659778, 0.4646337531215351, -0.33019373723438539, 0.00073717636611120589},
    {-0.82163712875659778, -0.4646337531215351, 0.33019373723438539, 0.00073717636611120589},
    {0.82163712875659778, -0.4646337531215351, -0.33019373723438539, 0.00073717636611120589},
    {-0.82163712875659778, 0.4646337531215351, -0.33019373723438539, 0.00073717636611120589},
    {-0.82163712875659778, -0.4646337531215351, -0.33019373723438539, 0.00073717636611120589},
    {0.82163712875659778, 0.33019373723438539, 0.4646337531215351, 0.00073717636611120589},
    {-0.82163712875659778, 0.33019373723438539, 0.4646337531215351, 0.00073717636611120589},
    {0.82163712875659778, -0.33019373723438539, 0.4646337531215351, 0.00073717636611120589},
    {0.82163712875659778, 0.33019373723438539, -0.4646337531215351, 0.00073717636611120589},
    {-0.82163712875659778, -0.33019373723438539, 0.4646337531215351, 0.00073717636611120589},
    {0.82163712875659778, -0.33019373723438539, -0.4646337531215351, 0.00073717636611120589},
    {-0.82163712875659778, 0.33019373723438539, -0.4646337531215351, 0.00073717636611120589},
    {-0.82163712875659778, -0.33019373723438539, -0.4646337531215351, 0.00073717636611120589},
    {0.4646337531215351, 0.82163712875659778, 0.33019373723438539, 0.00073717636611120589},
    {-0.4646337531215351, 0.82163712875659778, 0.33019373723438539, 0.00073717636611120589},
    {0.4646337531215351, -0.82163712875659778, 0.33019373723438539, 0.00073717636611120589},
    {0.4646337531215351, 0.82163712875659778, -0.33019373723438539, 0.00073717636611120589},
    {-0.4646337531215351, -0.82163712875659778, 0.33019373723438539, 0.00073717636611120589},
    {0.4646337531215351, -0.82163712875659778, -0.33019373723438539, 0.00073717636611120589},
    {-0.4646337531215351, 0.82163712875659778, -0.33019373723438539, 0.00073717636611120589},
    {-0.4646337531215351, -0.82163712875659778, -0.33019373723438539, 0.00073717636611120589},
    {0.33019373723438539, 0.82163712875659778, 0.4646337531215351, 0.00073717636611120589},
    {-0.33019373723438539, 0.82163712875659778, 0.4646337531215351, 0.00073717636611120589},
    {0.33019373723438539, -0.82163712875659778, 0.4646337531215351, 0.00073717636611120589},
    {0.33019373723438539, 0.82163712875659778, -0.4646337531215351, 0.00073717636611120589},
    {-0.33019373723438539, -0.82163712875659778, 0.4646337531215351, 0.00073717636611120589},
    {0.33019373723438539, -0.82163712875659778, -0.4646337531215351, 0.00073717636611120589},
    {-0.33019373723438539, 0.82163712875659778, -0.4646337531215351, 0.00073717636611120589},
    {-0.33019373723438539, -0.82163712875659778, -0.4646337531215351, 0.00073717636611120589},
    {0.40639016975576908, 0.27254235735637772, 0.87210532240808258, 0.00071834488957569337},
    {-0.40639016975576908, 0.27254235735637772, 0.87210532240808258, 0.00071834488957569337},
    {0.40639016975576908, -0.27254235735637772, 0.87210532240808258, 0.00071834488957569337},
    {0.40639016975576908, 0.27254235735637772, -0.87210532240808258, 0.00071834488957569337},
    {-0.40639016975576908, -0.27254235735637772, 0.87210532240808258, 0.00071834488957569337},
    {0.40639016975576908, -0.27254235735637772, -0.87210532240808258, 0.00071834488957569337},
    {-0.40639016975576908, 0.27254235735637772, -0.87210532240808258, 0.00071834488957569337},
    {-0.40639016975576908, -0.27254235735637772, -0.87210532240808258, 0.00071834488957569337},
    {0.27254235735637772, 0.40639016975576908, 0.87210532240808258, 0.00071834488957569337},
    {-0.27254235735637772, 0.40639016975576908, 0.87210532240808258, 0.00071834488957569337},
    {0.27254235735637772, -0.40639016975576908, 0.87210532240808258, 0.00071834488957569337},
    {0.27254235735637772, 0.40639016975576908, -0.87210532240808258, 0.00071834488957569337},
    {-0.27254235735637772, -0.40639016975576908, 0.87210532240808258, 0.00071834488957569337},
    {0.27254235735637772, -0.40639016975576908, -0.87210532240808258, 0.00071834488957569337},
    {-0.27254235735637772, 0.40639016975576908, -0.87210532240808258, 0.00071834488957569337},
    {-0.27254235735637772, -0.40639016975576908, -0.87210532240808258, 0.00071834488957569337},
    {0.87210532240808258, 0.40639016975576908, 0.27254235735637772, 0.00071834488957569337},
    {-0.87210532240808258, 0.40639016975576908, 0.27254235735637772, 0.00071834488957569337},
    {0.87210532240808258, -0.40639016975576908, 0.27254235735637772, 0.00071834488957569337},
    {0.87210532240808258, 0.40639016975576908, -0.27254235735637772, 0.00071834488957569337},
    {-0.87210532240808258, -0.40639016975576908, 0.27254235735637772, 0.00071834488957569337},
    {0.87210532240808258, -0.40639016975576908, -0.27254235735637772, 0.00071834488957569337},
    {-0.87210532240808258, 0.40639016975576908, -0.27254235735637772, 0.00071834488957569337},
    {-0.87210532240808258, -0.40639016975576908, -0.27254235735637772, 0.00071834488957569337},
    {0.87210532240808258, 0.27254235735637772, 0.40639016975576908, 0.00071834488957569337},
    {-0.87210532240808258, 0.27254235735637772, 0.40639016975576908, 0.00071834488957569337},
    {0.87210532240808258, -0.27254235735637772, 0.40639016975576908, 0.00071834488957569337},
    {0.87210532240808258, 0.27254235735637772, -0.40639016975576908, 0.00071834488957569337},
    {-0.87210532240808258, -0.27254235735637772, 0.40639016975576908, 0.00071834488957569337},
    {0.87210532240808258, -0.27254235735637772, -0.40639016975576908, 0.00071834488957569337},
    {-0.87210532240808258, 0.27254235735637772, -0.40639016975576908, 0.00071834488957569337},
    {-0.87210532240808258, -0.27254235735637772, -0.40639016975576908, 0.00071834488957569337},
    {0.40639016975576908, 0.87210532240808258, 0.27254235735637772, 0.00071834488957569337},
    {-0.40639016975576908, 0.87210532240808258, 0.27254235735637772, 0.00071834488957569337},
    {0.40639016975576908, -0.87210532240808258, 0.27254235735637772, 0.00071834488957569337},
    {0.40639016975576908, 0.87210532240808258, -0.27254235735637772, 0.00071834488957569337},
    {-0.40639016975576908, -0.87210532240808258, 0.27254235735637772, 0.00071834488957569337},
    {0.40639016975576908, -0.87210532240808258, -0.27254235735637772, 0.00071834488957569337},
    {-0.40639016975576908, 0.87210532240808258, -0.27254235735637772, 0.00071834488957569337},
    {-0.40639016975576908, -0.87210532240808258, -0.27254235735637772, 0.00071834488957569337},
    {0.27254235735637772, 0.87210532240808258, 0.40639016975576908, 0.00071834488957569337},
    {-0.27254235735637772, 0.87210532240808258, 0.40639016975576908, 0.00071834488957569337},
    {0.27254235735637772, -0.87210532240808258, 0.40639016975576908, 0.00071834488957569337},
    {0.27254235735637772, 0.87210532240808258, -0.40639016975576908, 0.00071834488957569337},
    {-0.27254235735637772, -0.87210532240808258, 0.40639016975576908, 0.00071834488957569337},
    {0.27254235735637772, -0.87210532240808258, -0.40639016975576908, 0.00071834488957569337},
    {-0.27254235735637772, 0.87210532240808258, -0.40639016975576908, 0.00071834488957569337},
    {-0.27254235735637772, -0.87210532240808258, -0.40639016975576908, 0.00071834488957569337},
    {0.34563294666430872, 0.21395102374952499, 0.91365355885952593, 0.00068958155298221913},
    {-0.34563294666430872, 0.21395102374952499, 0.91365355885952593, 0.00068958155298221913},
    {0.34563294666430872, -0.21395102374952499, 0.91365355885952593, 0.00068958155298221913},
    {0.34563294666430872, 0.21395102374952499, -0.91365355885952593, 0.00068958155298221913},
    {-0.34563294666430872, -0.21395102374952499, 0.91365355885952593, 0.00068958155298221913},
    {0.34563294666430872, -0.21395102374952499, -0.91365355885952593, 0.00068958155298221913},
    {-0.34563294666430872, 0.21395102374952499, -0.91365355885952593, 0.00068958155298221913},
    {-0.34563294666430872, -0.21395102374952499, -0.91365355885952593, 0.00068958155298221913},
    {0.21395102374952499, 0.34563294666430872, 0.91365355885952593, 0.00068958155298221913},
    {-0.21395102374952499, 0.34563294666430872, 0.91365355885952593, 0.00068958155298221913},
    {0.21395102374952499, -0.34563294666430872, 0.91365355885952593, 0.00068958155298221913},
    {0.21395102374952499, 0.34563294666430872, -0.91365355885952593, 0.00068958155298221913},
    {-0.21395102374952499, -0.34563294666430872, 0.91365355885952593, 0.00068958155298221913},
    {0.21395102374952499, -0.34563294666430872, -0.91365355885952593, 0.00068958155298221913},
    {-0.21395102374952499, 0.34563294666430872, -0.91365355885952593, 0.00068958155298221913},
    {-0.21395102374952499, -0.34563294666430872, -0.91365355885952593, 0.00068958155298221913},
    {0.91365355885952593, 0.34563294666430872, 0.21395102374952499, 0.00068958155298221913},
    {-0.91365355885952593, 0.34563294666430872, 0.21395102374952499, 0.00068958155298221913},
    {0.91365355885952593, -0.34563294666430872, 0.21395102374952499, 0.00068958155298221913},
    {0.91365355885952593, 0.34563294666430872, -0.21395102374952499, 0.00068958155298221913},
    {-0.91365355885952593, -0.34563294666430872, 0.21395102374952499, 0.00068958155298221913},
    {0.91365355885952593, -0.34563294666430872, -0.21395102374952499, 0.00068958155298221913},
    {-0.91365355885952593, 0.34563294666430872, -0.21395102374952499, 0.00068958155298221913},
    {-0.91365355885952593, -0.34563294666430872, -0.21395102374952499, 0.00068958155298221913},
    {0.91365355885952593, 0.21395102374952499, 0.34563294666430872, 0.00068958155298221913},
    {-0.91365355885952593, 0.21395102374952499, 0.34563294666430872, 0.00068958155298221913},
    {0.91365355885952593, -0.21395102374952499, 0.34563294666430872, 0.00068958155298221913},
    {0.91365355885952593, 0.21395102374952499, -0.34563294666430872, 0.00068958155298221913},
    {-0.91365355885952593, -0.21395102374952499, 0.34563294666430872, 0.00068958155298221913},
    {0.91365355885952593, -0.21395102374952499, -0.34563294666430872, 0.00068958155298221913},
    {-0.91365355885952593, 0.21395102374952499, -0.34563294666430872, 0.00068958155298221913},
    {-0.91365355885952593, -0.21395102374952499, -0.34563294666430872, 0.00068958155298221913},
    {0.34563294666430872, 0.91365355885952593, 0.21395102374952499, 0.00068958155298221913},
    {-0.34563294666430872, 0.91365355885952593, 0.21395102374952499, 0.00068958155298221913},
    {0.34563294666430872, -0.91365355885952593, 0.21395102374952499, 0.00068958155298221913},
    {0.34563294666430872, 0.91365355885952593, -0.21395102374952499, 0.00068958155298221913},
    {-0.34563294666430872, -0.91365355885952593, 0.21395102374952499, 0.00068958155298221913},
    {0.34563294666430872, -0.91365355885952593, -0.21395102374952499, 0.00068958155298221913},
    {-0.34563294666430872, 0.91365355885952593, -0.21395102374952499, 0.00068958155298221913},
    {-0.34563294666430872, -0.91365355885952593, -0.21395102374952499, 0.00068958155298221913},
    {0.21395102374952499, 0.91365355885952593, 0.34563294666430872, 0.00068958155298221913},
    {-0.21395102374952499, 0.91365355885952593, 0.34563294666430872, 0.00068958155298221913},
    {0.21395102374952499, -0.91365355885952593, 0.34563294666430872, 0.00068958155298221913},
    {0.21395102374952499, 0.91365355885952593, -0.34563294666430872, 0.00068958155298221913},
    {-0.21395102374952499, -0.91365355885952593, 0.34563294666430872, 0.00068958155298221913},
    {0.21395102374952499, -0.91365355885952593, -0.34563294666430872, 0.00068958155298221913},
    {-0.21395102374952499, 0.91365355885952593, -0.34563294666430872, 0.00068958155298221913},
    {-0.21395102374952499, -0.91365355885952593, -0.34563294666430872, 0.00068958155298221913},
    {0.28313951210503319, 0.1555922309786647, 0.9463736441511913, 0.00064801058017928859},
    {-0.28313951210503319, 0.1555922309786647, 0.9463736441511913, 0.00064801058017928859},
    {0.28313951210503319, -0.1555922309786647, 0.9463736441511913, 0.00064801058017928859},
    {0.28313951210503319, 0.1555922309786647, -0.9463736441511913, 0.00064801058017928859},
    {-0.28313951210503319, -0.1555922309786647, 0.9463736441511913, 0.00064801058017928859},
    {0.28313951210503319, -0.1555922309786647, -0.9463736441511913, 0.00064801058017928859},
    {-0.28313951210503319, 0.1555922309786647, -0.9463736441511913, 0.00064801058017928859},
    {-0.28313951210503319, -0.1555922309786647, -0.9463736441511913, 0.00064801058017928859},
    {0.1555922309786647, 0.28313951210503319, 0.9463736441511913, 0.00064801058017928859},
    {-0.1555922309786647, 0.28313951210503319, 0.9463736441511913, 0.00064801058017928859},
    {0.1555922309786647, -0.28313951210503319, 0.9463736441511913, 0.00064801058017928859},
    {0.1555922309786647, 0.28313951210503319, -0.9463736441511913, 0.00064801058017928859},
    {-0.1555922309786647, -0.28313951210503319, 0.9463736441511913, 0.00064801058017928859},
    {0.1555922309786647, -0.28313951210503319, -0.9463736441511913, 0.00064801058017928859},
    {-0.1555922309786647, 0.28313951210503319, -0.9463736441511913, 0.00064801058017928859},
    {-0.1555922309786647, -0.28313951210503319, -0.9463736441511913, 0.00064801058017928859},
    {0.9463736441511913, 0.28313951210503319, 0.1555922309786647, 0.00064801058017928859},
    {-0.9463736441511913, 0.28313951210503319, 0.1555922309786647, 0.00064801058017928859},
    {0.9463736441511913, -0.28313951210503319, 0.1555922309786647, 0.00064801058017928859},
    {0.9463736441511913, 0.28313951210503319, -0.1555922309786647, 0.00064801058017928859},
    {-0.9463736441511913, -0.28313951210503319, 0.1555922309786647, 0.00064801058017928859},
    {0.9463736441511913, -0.28313951210503319, -0.1555922309786647, 0.00064801058017928859},
    {-0.9463736441511913, 0.28313951210503319, -0.1555922309786647, 0.00064801058017928859},
    {-0.9463736441511913, -0.28313951210503319, -0.1555922309786647, 0.00064801058017928859},
    {0.9463736441511913, 0.1555922309786647, 0.28313951210503319, 0.00064801058017928859},
    {-0.9463736441511913, 0.1555922309786647, 0.28313951210503319, 0.00064801058017928859},
    {0.9463736441511913, -0.1555922309786647, 0.28313951210503319, 0.00064801058017928859},
    {0.9463736441511913, 0.1555922309786647, -0.28313951210503319, 0.00064801058017928859},
    {-0.9463736441511913, -0.1555922309786647, 0.28313951210503319, 0.00064801058017928859},
    {0.9463736441511913, -0.1555922309786647, -0.28313951210503319, 0.00064801058017928859},
    {-0.9463736441511913, 0.1555922309786647, -0.28313951210503319, 0.00064801058017928859},
    {-0.9463736441511913, -0.1555922309786647, -0.28313951210503319, 0.00064801058017928859},
    {0.28313951210503319, 0.9463736441511913, 0.1555922309786647, 0.00064801058017928859},
    {-0.28313951210503319, 0.9463736441511913, 0.1555922309786647, 0.00064801058017928859},
    {0.28313951210503319, -0.9463736441511913, 0.1555922309786647, 0.00064801058017928859},
    {0.28313951210503319, 0.9463736441511913, -0.1555922309786647, 0.00064801058017928859},
    {-0.28313951210503319, -0.9463736441511913, 0.1555922309786647, 0.00064801058017928859},
    {0.28313951210503319, -0.9463736441511913, -0.1555922309786647, 0.00064801058017928859},
    {-0.28313951210503319, 0.9463736441511913, -0.1555922309786647, 0.00064801058017928859},
    {-0.28313951210503319, -0.9463736441511913, -0.1555922309786647, 0.00064801058017928859},
    {0.1555922309786647, 0.9463736441511913, 0.28313951210503319, 0.00064801058017928859},
    {-0.1555922309786647, 0.9463736441511913, 0.28313951210503319, 0.00064801058017928859},
    {0.1555922309786647, -0.9463736441511913, 0.28313951210503319, 0.00064801058017928859},
    {0.1555922309786647, 0.9463736441511913, -0.28313951210503319, 0.00064801058017928859},
    {-0.1555922309786647, -0.9463736441511913, 0.28313951210503319, 0.00064801058017928859},
    {0.1555922309786647, -0.9463736441511913, -0.28313951210503319, 0.00064801058017928859},
    {-0.1555922309786647, 0.9463736441511913, -0.28313951210503319, 0.00064801058017928859},
    {-0.1555922309786647, -0.9463736441511913, -0.28313951210503319, 0.00064801058017928859},
    {0.21976820229253299, 0.098928789796860969, 0.97052307124067727, 0.00058975588965946358},
    {-0.21976820229253299, 0.098928789796860969, 0.97052307124067727, 0.00058975588965946358},
    {0.21976820229253299, -0.098928789796860969, 0.97052307124067727, 0.00058975588965946358},
    {0.21976820229253299, 0.098928789796860969, -0.97052307124067727, 0.00058975588965946358},
    {-0.21976820229253299, -0.098928789796860969, 0.97052307124067727, 0.00058975588965946358},
    {0.21976820229253299, -0.098928789796860969, -0.97052307124067727, 0.00058975588965946358},
    {-0.21976820229253299, 0.098928789796860969, -0.97052307124067727, 0.00058975588965946358},
    {-0.21976820229253299, -0.098928789796860969, -0.97052307124067727, 0.00058975588965946358},
    {0.098928789796860969, 0.21976820229253299, 0.97052307124067727, 0.00058975588965946358},
    {-0.098928789796860969, 0.21976820229253299, 0.97052307124067727, 0.00058975588965946358},
    {0.098928789796860969, -0.21976820229253299, 0.97052307124067727, 0.00058975588965946358},
    {0.098928789796860969, 0.21976820229253299, -0.97052307124067727, 0.00058975588965946358},
    {-0.098928789796860969, -0.21976820229253299, 0.97052307124067727, 0.00058975588965946358},
    {0.098928789796860969, -0.21976820229253299, -0.97052307124067727, 0.00058975588965946358},
    {-0.098928789796860969, 0.21976820229253299, -0.97052307124067727, 0.00058975588965946358},
    {-0.098928789796860969, -0.21976820229253299, -0.97052307124067727, 0.00058975588965946358},
    {0.97052307124067727, 0.21976820229253299, 0.098928789796860969, 0.00058975588965946358},
    {-0.97052307124067727, 0.21976820229253299, 0.098928789796860969, 0.00058975588965946358},
    {0.97052307124067727, -0.21976820229253299, 0.098928789796860969, 0.00058975588965946358},
    {0.97052307124067727, 0.21976820229253299, -0.098928789796860969, 0.00058975588965946358},
    {-0.97052307124067727, -0.21976820229253299, 0.098928789796860969, 0.00058975588965946358},
    {0.97052307124067727, -0.21976820229253299, -0.098928789796860969, 0.00058975588965946358},
    {-0.97052307124067727, 0.21976820229253299, -0.098928789796860969, 0.00058975588965946358},
    {-0.97052307124067727, -0.21976820229253299, -0.098928789796860969, 0.00058975588965946358},
    {0.97052307124067727, 0.098928789796860969, 0.21976820229253299, 0.00058975588965946358},
    {-0.97052307124067727, 0.098928789796860969, 0.21976820229253299, 0.00058975588965946358},
    {0.97052307124067727, -0.098928789796860969, 0.21976820229253299, 0.00058975588965946358},
    {0.97052307124067727, 0.098928789796860969, -0.21976820229253299, 0.00058975588965946358},
    {-0.97052307124067727, -0.098928789796860969, 0.21976820229253299, 0.00058975588965946358},
    {0.97052307124067727, -0.098928789796860969, -0.21976820229253299, 0.00058975588965946358},
    {-0.97052307124067727, 0.098928789796860969, -0.21976820229253299, 0.00058975588965946358},
    {-0.97052307124067727, -0.098928789796860969, -0.21976820229253299, 0.00058975588965946358},
    {0.21976820229253299, 0.97052307124067727, 0.098928789796860969, 0.00058975588965946358},
    {-0.21976820229253299, 0.97052307124067727, 0.098928789796860969, 0.00058975588965946358},
    {0.21976820229253299, -0.97052307124067727, 0.098928789796860969, 0.00058975588965946358},
    {0.21976820229253299, 0.97052307124067727, -0.098928789796860969, 0.00058975588965946358},
    {-0.21976820229253299, -0.97052307124067727, 0.098928789796860969, 0.00058975588965946358},
    {0.21976820229253299, -0.97052307124067727, -0.098928789796860969, 0.00058975588965946358},
    {-0.21976820229253299, 0.97052307124067727, -0.098928789796860969, 0.00058975588965946358},
    {-0.21976820229253299, -0.97052307124067727, -0.098928789796860969, 0.00058975588965946358},
    {0.098928789796860969, 0.97052307124067727, 0.21976820229253299, 0.00058975588965946358},
    {-0.098928789796860969, 0.97052307124067727, 0.21976820229253299, 0.00058975588965946358},
    {0.098928789796860969, -0.97052307124067727, 0.21976820229253299, 0.00058975588965946358},
    {0.098928789796860969, 0.97052307124067727, -0.21976820229253299, 0.00058975588965946358},
    {-0.098928789796860969, -0.97052307124067727, 0.21976820229253299, 0.00058975588965946358},
    {0.098928789796860969, -0.97052307124067727, -0.21976820229253299, 0.00058975588965946358},
    {-0.098928789796860969, 0.97052307124067727, -0.21976820229253299, 0.00058975588965946358},
    {-0.098928789796860969, -0.97052307124067727, -0.21976820229253299, 0.00058975588965946358},
    {0.1564696098650355, 0.0459864291067551, 0.98661163054501488, 0.00050957088492473461},
    {-0.1564696098650355, 0.0459864291067551, 0.98661163054501488, 0.00050957088492473461},
    {0.1564696098650355, -0.0459864291067551, 0.98661163054501488, 0.00050957088492473461},
    {0.1564696098650355, 0.0459864291067551, -0.98661163054501488, 0.00050957088492473461},
    {-0.1564696098650355, -0.0459864291067551, 0.98661163054501488, 0.00050957088492473461},
    {0.1564696098650355, -0.0459864291067551, -0.98661163054501488, 0.00050957088492473461},
    {-0.1564696098650355, 0.0459864291067551, -0.98661163054501488, 0.00050957088492473461},
    {-0.1564696098650355, -0.0459864291067551, -0.98661163054501488, 0.00050957088492473461},
    {0.0459864291067551, 0.1564696098650355, 0.98661163054501488, 0.00050957088492473461},
    {-0.0459864291067551, 0.1564696098650355, 0.98661163054501488, 0.00050957088492473461},
    {0.0459864291067551, -0.1564696098650355, 0.98661163054501488, 0.00050957088492473461},
    {0.0459864291067551, 0.1564696098650355, -0.98661163054501488, 0.00050957088492473461},
    {-0.0459864291067551, -0.1564696098650355, 0.98661163054501488, 0.00050957088492473461},
    {0.0459864291067551, -0.1564696098650355, -0.98661163054501488, 0.00050957088492473461},
    {-0.0459864291067551, 0.1564696098650355, -0.98661163054501488, 0.00050957088492473461},
    {-0.0459864291067551, -0.1564696098650355, -0.98661163054501488, 0.00050957088492473461},
    {0.98661163054501488, 0.1564696098650355, 0.0459864291067551, 0.00050957088492473461},
    {-0.98661163054501488, 0.1564696098650355, 0.0459864291067551, 0.00050957088492473461},
    {0.98661163054501488, -0.1564696098650355, 0.0459864291067551, 0.00050957088492473461},
    {0.98661163054501488, 0.1564696098650355, -0.0459864291067551, 0.00050957088492473461},
    {-0.98661163054501488, -0.1564696098650355, 0.0459864291067551, 0.00050957088492473461},
    {0.98661163054501488, -0.1564696098650355, -0.0459864291067551, 0.00050957088492473461},
    {-0.98661163054501488, 0.1564696098650355, -0.0459864291067551, 0.00050957088492473461},
    {-0.98661163054501488, -0.1564696098650355, -0.0459864291067551, 0.00050957088492473461},
    {0.98661163054501488, 0.0459864291067551, 0.1564696098650355, 0.00050957088492473461},
    {-0.98661163054501488, 0.0459864291067551, 0.1564696098650355, 0.00050957088492473461},
    {0.98661163054501488, -0.0459864291067551, 0.1564696098650355, 0.00050957088492473461},
    {0.98661163054501488, 0.0459864291067551, -0.1564696098650355, 0.00050957088492473461},
    {-0.98661163054501488, -0.0459864291067551, 0.1564696098650355, 0.00050957088492473461},
    {0.98661163054501488, -0.0459864291067551, -0.1564696098650355, 0.00050957088492473461},
    {-0.98661163054501488, 0.0459864291067551, -0.1564696098650355, 0.00050957088492473461},
    {-0.98661163054501488, -0.0459864291067551, -0.1564696098650355, 0.00050957088492473461},
    {0.1564696098650355, 0.98661163054501488, 0.0459864291067551, 0.00050957088492473461},
    {-0.1564696098650355, 0.98661163054501488, 0.0459864291067551, 0.00050957088492473461},
    {0.1564696098650355, -0.98661163054501488, 0.0459864291067551, 0.00050957088492473461},
    {0.1564696098650355, 0.98661163054501488, -0.0459864291067551, 0.00050957088492473461},
    {-0.1564696098650355, -0.98661163054501488, 0.0459864291067551, 0.00050957088492473461},
    {0.1564696098650355, -0.98661163054501488, -0.0459864291067551, 0.00050957088492473461},
    {-0.1564696098650355, 0.98661163054501488, -0.0459864291067551, 0.00050957088492473461},
    {-0.1564696098650355, -0.98661163054501488, -0.0459864291067551, 0.00050957088492473461},
    {0.0459864291067551, 0.98661163054501488, 0.1564696098650355, 0.00050957088492473461},
    {-0.0459864291067551, 0.98661163054501488, 0.1564696098650355, 0.00050957088492473461},
    {0.0459864291067551, -0.98661163054501488, 0.1564696098650355, 0.00050957088492473461},
    {0.0459864291067551, 0.98661163054501488, -0.1564696098650355, 0.00050957088492473461},
    {-0.0459864291067551, -0.98661163054501488, 0.1564696098650355, 0.00050957088492473461},
    {0.0459864291067551, -0.98661163054501488, -0.1564696098650355, 0.00050957088492473461},
    {-0.0459864291067551, 0.98661163054501488, -0.1564696098650355, 0.00050957088492473461},
    {-0.0459864291067551, -0.98661163054501488, -0.1564696098650355, 0.00050957088492473461},
    {0.60273566737212947, 0.3376625140173426, 0.72297561639723473, 0.00075369064289097548},
    {-0.60273566737212947, 0.3376625140173426, 0.72297561639723473, 0.00075369064289097548},
    {0.60273566737212947, -0.3376625140173426, 0.72297561639723473, 0.00075369064289097548},
    {0.60273566737212947, 0.3376625140173426, -0.72297561639723473, 0.00075369064289097548},
    {-0.60273566737212947, -0.3376625140173426, 0.72297561639723473, 0.00075369064289097548},
    {0.60273566737212947, -0.3376625140173426, -0.72297561639723473, 0.00075369064289097548},
    {-0.60273566737212947, 0.3376625140173426, -0.72297561639723473, 0.00075369064289097548},
    {-0.60273566737212947, -0.3376625140173426, -0.72297561639723473, 0.00075369064289097548},
    {0.3376625140173426, 0.60273566737212947, 0.72297561639723473, 0.00075369064289097548},
    {-0.3376625140173426, 0.60273566737212947, 0.72297561639723473, 0.00075369064289097548},
    {0.3376625140173426, -0.60273566737212947, 0.72297561639723473, 0.00075369064289097548},
    {0.3376625140173426, 0.60273566737212947, -0.72297561639723473, 0.00075369064289097548},
    {-0.3376625140173426, -0.60273566737212947, 0.72297561639723473, 0.00075369064289097548},
    {0.3376625140173426, -0.60273566737212947, -0.72297561639723473, 0.00075369064289097548},
    {-0.3376625140173426, 0.60273566737212947, -0.72297561639723473, 0.00075369064289097548},
    {-0.3376625140173426, -0.60273566737212947, -0.72297561639723473, 0.00075369064289097548},
    {0.72297561639723473, 0.60273566737212947, 0.3376625140173426, 0.00075369064289097548},
    {-0.72297561639723473, 0.60273566737212947, 0.3376625140173426, 0.00075369064289097548},
    {0.72297561639723473, -0.60273566737212947, 0.3376625140173426, 0.00075369064289097548},
    {0.72297561639723473, 0.60273566737212947, -0.3376625140173426, 0.00075369064289097548},
    {-0.72297561639723473, -0.60273566737212947, 0.3376625140173426, 0.00075369064289097548},
    {0.72297561639723473, -0.60273566737212947, -0.3376625140173426, 0.00075369064289097548},
    {-0.72297561639723473, 0.60273566737212947, -0.3376625140173426, 0.00075369064289097548},
    {-0.72297561639723473, -0.60273566737212947, -0.3376625140173426, 0.00075369064289097548},
    {0.72297561639723473, 0.3376625140173426, 0.60273566737212947, 0.00075369064289097548},
    {-0.72297561639723473, 0.3376625140173426, 0.60273566737212947, 0.00075369064289097548},
    {0.72297561639723473, -0.3376625140173426, 0.60273566737212947, 0.00075369064289097548},
    {0.72297561639723473, 0.3376625140173426, -0.60273566737212947, 0.00075369064289097548},
    {-0.72297561639723473, -0.3376625140173426, 0.60273566737212947, 0.00075369064289097548},
    {0.72297561639723473, -0.3376625140173426, -0.60273566737212947, 0.00075369064289097548},
    {-0.72297561639723473, 0.3376625140173426, -0.60273566737212947, 0.00075369064289097548},
    {-0.72297561639723473, -0.3376625140173426, -0.60273566737212947, 0.00075369064289097548},
    {0.60273566737212947, 0.72297561639723473, 0.3376625140173426, 0.00075369064289097548},
    {-0.60273566737212947, 0.72297561639723473, 0.3376625140173426, 0.00075369064289097548},
    {0.60273566737212947, -0.72297561639723473, 0.3376625140173426, 0.00075369064289097548},
    {0.60273566737212947, 0.72297561639723473, -0.3376625140173426, 0.00075369064289097548},
    {-0.60273566737212947, -0.72297561639723473, 0.3376625140173426, 0.00075369064289097548},
    {0.60273566737212947, -0.72297561639723473, -0.3376625140173426, 0.00075369064289097548},
    {-0.60273566737212947, 0.72297561639723473, -0.3376625140173426, 0.00075369064289097548},
    {-0.60273566737212947, -0.72297561639723473, -0.3376625140173426, 0.00075369064289097548},
    {0.3376625140173426, 0.72297561639723473, 0.60273566737212947, 0.00075369064289097548},
    {-0.3376625140173426, 0.72297561639723473, 0.60273566737212947, 0.00075369064289097548},
    {0.3376625140173426, -0.72297561639723473, 0.60273566737212947, 0.00075369064289097548},
    {0.3376625140173426, 0.72297561639723473, -0.60273566737212947, 0.00075369064289097548},
    {-0.3376625140173426, -0.72297561639723473, 0.60273566737212947, 0.00075369064289097548},
    {0.3376625140173426, -0.72297561639723473, -0.60273566737212947, 0.00075369064289097548},
    {-0.3376625140173426, 0.72297561639723473, -0.60273566737212947, 0.00075369064289097548},
    {-0.3376625140173426, -0.72297561639723473, -0.60273566737212947, 0.00075369064289097548},
    {0.54960323202550965, 0.28223013097279881, 0.78630937964530889, 0.00074725059655751181},
    {-0.54960323202550965, 0.28223013097279881, 0.78630937964530889, 0.00074725059655751181},
    {0.54960323202550965, -0.28223013097279881, 0.78630937964530889, 0.00074725059655751181},
    {0.54960323202550965, 0.28223013097279881, -0.78630937964530889, 0.00074725059655751181},
    {-0.54960323202550965, -0.28223013097279881, 0.78630937964530889, 0.00074725059655751181},
    {0.54960323202550965, -0.28223013097279881, -0.78630937964530889, 0.00074725059655751181},
    {-0.54960323202550965, 0.28223013097279881, -0.78630937964530889, 0.00074725059655751181},
    {-0.54960323202550965, -0.28223013097279881, -0.78630937964530889, 0.00074725059655751181},
    {0.28223013097279881, 0.54960323202550965, 0.78630937964530889, 0.00074725059655751181},
    {-0.28223013097279881, 0.54960323202550965, 0.78630937964530889, 0.00074725059655751181},
    {0.28223013097279881, -0.54960323202550965, 0.78630937964530889, 0.00074725059655751181},
    {0.28223013097279881, 0.54960323202550965, -0.78630937964530889, 0.00074725059655751181},
    {-0.28223013097279881, -0.54960323202550965, 0.78630937964530889, 0.00074725059655751181},
    {0.28223013097279881, -0.54960323202550965, -0.78630937964530889, 0.00074725059655751181},
    {-0.28223013097279881, 0.54960323202550965, -0.78630937964530889, 0.00074725059655751181},
    {-0.28223013097279881, -0.54960323202550965, -0.78630937964530889, 0.00074725059655751181},
    {0.78630937964530889, 0.54960323202550965, 0.28223013097279881, 0.00074725059655751181},
    {-0.78630937964530889, 0.54960323202550965, 0.28223013097279881, 0.00074725059655751181},
    {0.78630937964530889, -0.54960323202550965, 0.28223013097279881, 0.00074725059655751181},
    {0.78630937964530889, 0.54960323202550965, -0.28223013097279881, 0.00074725059655751181},
    {-0.78630937964530889, -0.54960323202550965, 0.28223013097279881, 0.00074725059655751181},
    {0.78630937964530889, -0.54960323202550965, -0.28223013097279881, 0.00074725059655751181},
    {-0.78630937964530889, 0.54960323202550965, -0.28223013097279881, 0.00074725059655751181},
    {-0.78630937964530889, -0.54960323202550965, -0.28223013097279881, 0.00074725059655751181},
    {0.78630937964530889, 0.28223013097279881, 0.54960323202550965, 0.00074725059655751181},
    {-0.78630937964530889, 0.28223013097279881, 0.54960323202550965, 0.00074725059655751181},
    {0.78630937964530889, -0.28223013097279881, 0.54960323202550965, 0.00074725059655751181},
    {0.78630937964530889, 0.28223013097279881, -0.54960323202550965, 0.00074725059655751181},
    {-0.78630937964530889, -0.28223013097279881, 0.54960323202550965, 0.00074725059655751181},
    {0.78630937964530889, -0.28223013097279881, -0.54960323202550965, 0.00074725059655751181},
    {-0.78630937964530889, 0.28223013097279881, -0.54960323202550965, 0.00074725059655751181},
    {-0.78630937964530889, -0.28223013097279881, -0.54960323202550965, 0.00074725059655751181},
    {0.54960323202550965, 0.78630937964530889, 0.28223013097279881, 0.00074725059655751181},
    {-0.54960323202550965, 0.78630937964530889, 0.28223013097279881, 0.00074725059655751181},
    {0.54960323202550965, -0.78630937964530889, 0.28223013097279881, 0.00074725059655751181},
    {0.54960323202550965, 0.78630937964530889, -0.28223013097279881, 0.00074725059655751181},
    {-0.54960323202550965, -0.78630937964530889, 0.28223013097279881, 0.00074725059655751181},
    {0.54960323202550965, -0.78630937964530889, -0.28223013097279881, 0.00074725059655751181},
    {-0.54960323202550965, 0.78630937964530889, -0.28223013097279881, 0.00074725059655751181},
    {-0.54960323202550965, -0.78630937964530889, -0.28223013097279881, 0.00074725059655751181},
    {0.28223013097279881, 0.78630937964530889, 0.54960323202550965, 0.00074725059655751181},
    {-0.28223013097279881, 0.78630937964530889, 0.54960323202550965, 0.00074725059655751181},
    {0.28223013097279881, -0.78630937964530889, 0.54960323202550965, 0.00074725059655751181},
    {0.28223013097279881, 0.78630937964530889, -0.54960323202550965, 0.00074725059655751181},
    {-0.28223013097279881, -0.78630937964530889, 0.54960323202550965, 0.00074725059655751181},
    {0.28223013097279881, -0.78630937964530889, -0.54960323202550965, 0.00074725059655751181},
    {-0.28223013097279881, 0.78630937964530889, -0.54960323202550965, 0.00074725059655751181},
    {-0.28223013097279881, -0.78630937964530889, -0.54960323202550965, 0.00074725059655751181},
    {0.49217077552345673, 0.224863234259254, 0.84095448961231367, 0.00073430171322796977},
    {-0.49217077552345673, 0.224863234259254, 0.84095448961231367, 0.00073430171322796977},
    {0.49217077552345673, -0.224863234259254, 0.84095448961231367, 0.00073430171322796977},
    {0.49217077552345673, 0.224863234259254, -0.84095448961231367, 0.00073430171322796977},
    {-0.49217077552345673, -0.224863234259254, 0.84095448961231367, 0.00073430171322796977},
    {0.49217077552345673, -0.224863234259254, -0.84095448961231367, 0.00073430171322796977},
    {-0.49217077552345673, 0.224863234259254, -0.84095448961231367, 0.00073430171322796977},
    {-0.49217077552345673, -0.224863234259254, -0.84095448961231367, 0.00073430171322796977},
    {0.224863234259254, 0.49217077552345673, 0.84095448961231367, 0.00073430171322796977},
    {-0.224863234259254, 0.49217077552345673, 0.84095448961231367, 0.00073430171322796977},
    {0.224863234259254, -0.49217077552345673, 0.84095448961231367, 0.00073430171322796977},
    {0.224863234259254, 0.49217077552345673, -0.84095448961231367, 0.00073430171322796977},
    {-0.224863234259254, -0.49217077552345673, 0.84095448961231367, 0.00073430171322796977},
    {0.224863234259254, -0.49217077552345673, -0.84095448961231367, 0.00073430171322796977},
    {-0.224863234259254, 0.49217077552345673, -0.84095448961231367, 0.00073430171322796977},
    {-0.224863234259254, -0.49217077552345673, -0.84095448961231367, 0.00073430171322796977},
    {0.84095448961231367, 0.49217077552345673, 0.224863234259254, 0.00073430171322796977},
    {-0.84095448961231367, 0.49217077552345673, 0.224863234259254, 0.00073430171322796977},
    {0.84095448961231367, -0.49217077552345673, 0.224863234259254, 0.00073430171322796977},
    {0.84095448961231367, 0.49217077552345673, -0.224863234259254, 0.00073430171322796977},
    {-0.84095448961231367, -0.49217077552345673, 0.224863234259254, 0.00073430171322796977},
    {0.84095448961231367, -0.49217077552345673, -0.224863234259254, 0.00073430171322796977},
    {-0.84095448961231367, 0.49217077552345673, -0.224863234259254, 0.00073430171322796977},
    {-0.84095448961231367, -0.49217077552345673, -0.224863234259254, 0.00073430171322796977},
    {0.84095448961231367, 0.224863234259254, 0.49217077552345673, 0.00073430171322796977},
    {-0.84095448961231367, 0.224863234259254, 0.49217077552345673, 0.00073430171322796977},
    {0.84095448961231367, -0.224863234259254, 0.49217077552345673, 0.00073430171322796977},
    {0.84095448961231367, 0.224863234259254, -0.49217077552345673, 0.00073430171322796977},
    {-0.84095448961231367, -0.224863234259254, 0.49217077552345673, 0.00073430171322796977},
    {0.84095448961231367, -0.224863234259254, -0.49217077552345673, 0.00073430171322796977},
    {-0.84095448961231367, 0.224863234259254, -0.49217077552345673, 0.00073430171322796977},
    {-0.84095448961231367, -0.224863234259254, -0.49217077552345673, 0.00073430171322796977},
    {0.49217077552345673, 0.84095448961231367, 0.224863234259254, 0.00073430171322796977},
    {-0.49217077552345673, 0.84095448961231367, 0.224863234259254, 0.00073430171322796977},
    {0.49217077552345673, -0.84095448961231367, 0.224863234259254, 0.00073430171322796977},
    {0.49217077552345673, 0.84095448961231367, -0.224863234259254, 0.00073430171322796977},
    {-0.49217077552345673, -0.84095448961231367, 0.224863234259254, 0.00073430171322796977},
    {0.49217077552345673, -0.84095448961231367, -0.224863234259254, 0.00073430171322796977},
    {-0.49217077552345673, 0.84095448961231367, -0.224863234259254, 0.00073430171322796977},
    {-0.49217077552345673, -0.84095448961231367, -0.224863234259254, 0.00073430171322796977},
    {0.224863234259254, 0.84095448961231367, 0.49217077552345673, 0.00073430171322796977},
    {-0.224863234259254, 0.84095448961231367, 0.49217077552345673, 0.00073430171322796977},
    {0.224863234259254, -0.84095448961231367, 0.49217077552345673, 0.00073430171322796977},
    {0.224863234259254, 0.84095448961231367, -0.49217077552345673, 0.00073430171322796977},
    {-0.224863234259254, -0.84095448961231367, 0.49217077552345673, 0.00073430171322796977},
    {0.224863234259254, -0.84095448961231367, -0.49217077552345673, 0.00073430171322796977},
    {-0.224863234259254, 0.84095448961231367, -0.49217077552345673, 0.00073430171322796977},
    {-0.224863234259254, -0.84095448961231367, -0.49217077552345673, 0.00073430171322796977},
    {0.43094229985984828, 0.16662247234564789, 0.8868628337578075, 0.00071308715821774451},
    {-0.43094229985984828, 0.16662247234564789, 0.8868628337578075, 0.00071308715821774451},
    {0.43094229985984828, -0.16662247234564789, 0.8868628337578075, 0.00071308715821774451},
    {0.43094229985984828, 0.16662247234564789, -0.8868628337578075, 0.00071308715821774451},
    {-0.43094229985984828, -0.16662247234564789, 0.8868628337578075, 0.00071308715821774451},
    {0.43094229985984828, -0.16662247234564789, -0.8868628337578075, 0.00071308715821774451},
    {-0.43094229985984828, 0.16662247234564789, -0.8868628337578075, 0.00071308715821774451},
    {-0.43094229985984828, -0.16662247234564789, -0.8868628337578075, 0.00071308715821774451},
    {0.16662247234564789, 0.43094229985984828, 0.8868628337578075, 0.00071308715821774451},
    {-0.16662247234564789, 0.43094229985984828, 0.8868628337578075, 0.00071308715821774451},
    {0.16662247234564789, -0.43094229985984828, 0.8868628337578075, 0.00071308715821774451},
    {0.16662247234564789, 0.43094229985984828, -0.8868628337578075, 0.00071308715821774451},
    {-0.16662247234564789, -0.43094229985984828, 0.8868628337578075, 0.00071308715821774451},
    {0.16662247234564789, -0.43094229985984828, -0.8868628337578075, 0.00071308715821774451},
    {-0.16662247234564789, 0.43094229985984828, -0.8868628337578075, 0.00071308715821774451},
    {-0.16662247234564789, -0.43094229985984828, -0.8868628337578075, 0.00071308715821774451},
    {0.8868628337578075, 0.43094229985984828, 0.16662247234564789, 0.00071308715821774451},
    {-0.8868628337578075, 0.43094229985984828, 0.16662247234564789, 0.00071308715821774451},
    {0.8868628337578075, -0.43094229985984828, 0.16662247234564789, 0.00071308715821774451},
    {0.8868628337578075, 0.43094229985984828, -0.16662247234564789, 0.00071308715821774451},
    {-0.8868628337578075, -0.43094229985984828, 0.16662247234564789, 0.00071308715821774451},
    {0.8868628337578075, -0.43094229985984828, -0.16662247234564789, 0.00071308715821774451},
    {-0.8868628337578075, 0.43094229985984828, -0.16662247234564789, 0.00071308715821774451},
    {-0.8868628337578075, -0.43094229985984828, -0.16662247234564789, 0.00071308715821774451},
    {0.8868628337578075, 0.16662247234564789, 0.43094229985984828, 0.00071308715821774451},
    {-0.8868628337578075, 0.16662247234564789, 0.43094229985984828, 0.00071308715821774451},
    {0.8868628337578075, -0.16662247234564789, 0.43094229985984828, 0.00071308715821774451},
    {0.8868628337578075, 0.16662247234564789, -0.43094229985984828, 0.00071308715821774451},
    {-0.8868628337578075, -0.16662247234564789, 0.43094229985984828, 0.00071308715821774451},
    {0.8868628337578075, -0.16662247234564789, -0.43094229985984828, 0.00071308715821774451},
    {-0.8868628337578075, 0.16662247234564789, -0.43094229985984828, 0.00071308715821774451},
    {-0.8868628337578075, -0.16662247234564789, -0.43094229985984828, 0.00071308715821774451},
    {0.43094229985984828, 0.8868628337578075, 0.16662247234564789, 0.00071308715821774451},
    {-0.43094229985984828, 0.8868628337578075, 0.16662247234564789, 0.00071308715821774451},
    {0.43094229985984828, -0.8868628337578075, 0.16662247234564789, 0.00071308715821774451},
    {0.43094229985984828, 0.8868628337578075, -0.16662247234564789, 0.00071308715821774451},
    {-0.43094229985984828, -0.8868628337578075, 0.16662247234564789, 0.00071308715821774451},
    {0.43094229985984828, -0.8868628337578075, -0.16662247234564789, 0.00071308715821774451},
    {-0.43094229985984828, 0.8868628337578075, -0.16662247234564789, 0.00071308715821774451},
    {-0.43094229985984828, -0.8868628337578075, -0.16662247234564789, 0.00071308715821774451},
    {0.16662247234564789, 0.8868628337578075, 0.43094229985984828, 0.00071308715821774451},
    {-0.16662247234564789, 0.8868628337578075, 0.43094229985984828, 0.00071308715821774451},
    {0.16662247234564789, -0.8868628337578075, 0.43094229985984828, 0.00071308715821774451},
    {0.16662247234564789, 0.8868628337578075, -0.43094229985984828, 0.00071308715821774451},
    {-0.16662247234564789, -0.8868628337578075, 0.43094229985984828, 0.00071308715821774451},
    {0.16662247234564789, -0.8868628337578075, -0.43094229985984828, 0.00071308715821774451},
    {-0.16662247234564789, 0.8868628337578075, -0.43094229985984828, 0.00071308715821774451},
    {-0.16662247234564789, -0.8868628337578075, -0.43094229985984828, 0.00071308715821774451},
    {0.36641081823136717, 0.1086964901822169, 0.92408234768611786, 0.00068170220321127763},
    {-0.36641081823136717, 0.1086964901822169, 0.92408234768611786, 0.00068170220321127763},
    {0.36641081823136717, -0.1086964901822169, 0.92408234768611786, 0.00068170220321127763},
    {0.36641081823136717, 0.1086964901822169, -0.92408234768611786, 0.00068170220321127763},
    {-0.36641081823136717, -0.1086964901822169, 0.92408234768611786, 0.00068170220321127763},
    {0.36641081823136717, -0.1086964901822169, -0.92408234768611786, 0.00068170220321127763},
    {-0.36641081823136717, 0.1086964901822169, -0.92408234768611786, 0.00068170220321127763},
    {-0.36641081823136717, -0.1086964901822169, -0.92408234768611786, 0.00068170220321127763},
    {0.1086964901822169, 0.36641081823136717, 0.92408234768611786, 0.00068170220321127763},
    {-0.1086964901822169, 0.36641081823136717, 0.92408234768611786, 0.00068170220321127763},
    {0.1086964901822169, -0.36641081823136717, 0.92408234768611786, 0.00068170220321127763},
    {0.1086964901822169, 0.36641081823136717, -0.92408234768611786, 0.00068170220321127763},
    {-0.1086964901822169, -0.36641081823136717, 0.92408234768611786, 0.00068170220321127763},
    {0.1086964901822169, -0.36641081823136717, -0.92408234768611786, 0.00068170220321127763},
    {-0.1086964901822169, 0.36641081823136717, -0.92408234768611786, 0.00068170220321127763},
    {-0.1086964901822169, -0.36641081823136717, -0.92408234768611786, 0.00068170220321127763},
    {0.92408234768611786, 0.36641081823136717, 0.1086964901822169, 0.00068170220321127763},
    {-0.92408234768611786, 0.36641081823136717, 0.1086964901822169, 0.00068170220321127763},
    {0.92408234768611786, -0.36641081823136717, 0.1086964901822169, 0.00068170220321127763},
    {0.92408234768611786, 0.36641081823136717, -0.1086964901822169, 0.00068170220321127763},
    {-0.92408234768611786, -0.36641081823136717, 0.1086964901822169, 0.00068170220321127763},
    {0.92408234768611786, -0.36641081823136717, -0.1086964901822169, 0.00068170220321127763},
    {-0.92408234768611786, 0.36641081823136717, -0.1086964901822169, 0.00068170220321127763},
    {-0.92408234768611786, -0.36641081823136717, -0.1086964901822169, 0.00068170220321127763},
    {0.92408234768611786, 0.1086964901822169, 0.36641081823136717, 0.00068170220321127763},
    {-0.92408234768611786, 0.1086964901822169, 0.36641081823136717, 0.00068170220321127763},
    {0.92408234768611786, -0.1086964901822169, 0.36641081823136717, 0.00068170220321127763},
    {0.92408234768611786, 0.1086964901822169, -0.36641081823136717, 0.00068170220321127763},
    {-0.92408234768611786, -0.1086964901822169, 0.36641081823136717, 0.00068170220321127763},
    {0.92408234768611786, -0.1086964901822169, -0.36641081823136717, 0.00068170220321127763},
    {-0.92408234768611786, 0.1086964901822169, -0.36641081823136717, 0.00068170220321127763},
    {-0.92408234768611786, -0.1086964901822169, -0.36641081823136717, 0.00068170220321127763},
    {0.36641081823136717, 0.92408234768611786, 0.1086964901822169, 0.00068170220321127763},
    {-0.36641081823136717, 0.92408234768611786, 0.1086964901822169, 0.00068170220321127763},
    {0.36641081823136717, -0.92408234768611786, 0.1086964901822169, 0.00068170220321127763},
    {0.36641081823136717, 0.92408234768611786, -0.1086964901822169, 0.00068170220321127763},
    {-0.36641081823136717, -0.92408234768611786, 0.1086964901822169, 0.00068170220321127763},
    {0.36641081823136717, -0.92408234768611786, -0.1086964901822169, 0.00068170220321127763},
    {-0.36641081823136717, 0.92408234768611786, -0.1086964901822169, 0.00068170220321127763},
    {-0.36641081823136717, -0.92408234768611786, -0.1086964901822169, 0.00068170220321127763},
    {0.1086964901822169, 0.92408234768611786, 0.36641081823136717, 0.00068170220321127763},
    {-0.1086964901822169, 0.92408234768611786, 0.36641081823136717, 0.00068170220321127763},
    {0.1086964901822169, -0.92408234768611786, 0.36641081823136717, 0.00068170220321127763},
    {0.1086964901822169, 0.92408234768611786, -0.36641081823136717, 0.00068170220321127763},
    {-0.1086964901822169, -0.92408234768611786, 0.36641081823136717, 0.00068170220321127763},
    {0.1086964901822169, -0.92408234768611786, -0.36641081823136717, 0.00068170220321127763},
    {-0.1086964901822169, 0.92408234768611786, -0.36641081823136717, 0.00068170220321127763},
    {-0.1086964901822169, -0.92408234768611786, -0.36641081823136717, 0.00068170220321127763},
    {0.29901890577584361, 0.052519897841200848, 0.9528007946676823, 0.00063809411456041212},
    {-0.29901890577584361, 0.052519897841200848, 0.9528007946676823, 0.00063809411456041212},
    {0.29901890577584361, -0.052519897841200848, 0.9528007946676823, 0.00063809411456041212},
    {0.29901890577584361, 0.052519897841200848, -0.9528007946676823, 0.00063809411456041212},
    {-0.29901890577584361, -0.052519897841200848, 0.9528007946676823, 0.00063809411456041212},
    {0.29901890577584361, -0.052519897841200848, -0.9528007946676823, 0.00063809411456041212},
    {-0.29901890577584361, 0.052519897841200848, -0.9528007946676823, 0.00063809411456041212},
    {-0.29901890577584361, -0.052519897841200848, -0.9528007946676823, 0.00063809411456041212},
    {0.052519897841200848, 0.29901890577584361, 0.9528007946676823, 0.00063809411456041212},
    {-0.052519897841200848, 0.29901890577584361, 0.9528007946676823, 0.00063809411456041212},
    {0.052519897841200848, -0.29901890577584361, 0.9528007946676823, 0.00063809411456041212},
    {0.052519897841200848, 0.29901890577584361, -0.9528007946676823, 0.00063809411456041212},
    {-0.052519897841200848, -0.29901890577584361, 0.9528007946676823, 0.00063809411456041212},
    {0.052519897841200848, -0.29901890577584361, -0.9528007946676823, 0.00063809411456041212},
    {-0.052519897841200848, 0.29901890577584361, -0.9528007946676823, 0.00063809411456041212},
    {-0.052519897841200848, -0.29901890577584361, -0.9528007946676823, 0.00063809411456041212},
    {0.9528007946676823, 0.29901890577584361, 0.052519897841200848, 0.00063809411456041212},
    {-0.9528007946676823, 0.29901890577584361, 0.052519897841200848, 0.00063809411456041212},
    {0.9528007946676823, -0.29901890577584361, 0.052519897841200848, 0.00063809411456041212},
    {0.9528007946676823, 0.29901890577584361, -0.052519897841200848, 0.00063809411456041212},
    {-0.9528007946676823, -0.29901890577584361, 0.052519897841200848, 0.00063809411456041212},
    {0.9528007946676823, -0.29901890577584361, -0.052519897841200848, 0.00063809411456041212},
    {-0.9528007946676823, 0.29901890577584361, -0.052519897841200848, 0.00063809411456041212},
    {-0.9528007946676823, -0.29901890577584361, -0.052519897841200848, 0.00063809411456041212},
    {0.9528007946676823, 0.052519897841200848, 0.29901890577584361, 0.00063809411456041212},
    {-0.9528007946676823, 0.052519897841200848, 0.29901890577584361, 0.00063809411456041212},
    {0.9528007946676823, -0.052519897841200848, 0.29901890577584361, 0.00063809411456041212},
    {0.9528007946676823, 0.052519897841200848, -0.29901890577584361, 0.00063809411456041212},
    {-0.9528007946676823, -0.052519897841200848, 0.29901890577584361, 0.00063809411456041212},
    {0.9528007946676823, -0.052519897841200848, -0.29901890577584361, 0.00063809411456041212},
    {-0.9528007946676823, 0.052519897841200848, -0.29901890577584361, 0.00063809411456041212},
    {-0.9528007946676823, -0.052519897841200848, -0.29901890577584361, 0.00063809411456041212},
    {0.29901890577584361, 0.9528007946676823, 0.052519897841200848, 0.00063809411456041212},
    {-0.29901890577584361, 0.9528007946676823, 0.052519897841200848, 0.00063809411456041212},
    {0.29901890577584361, -0.9528007946676823, 0.052519897841200848, 0.00063809411456041212},
    {0.29901890577584361, 0.9528007946676823, -0.052519897841200848, 0.00063809411456041212},
    {-0.29901890577584361, -0.9528007946676823, 0.052519897841200848, 0.00063809411456041212},
    {0.29901890577584361, -0.9528007946676823, -0.052519897841200848, 0.00063809411456041212},
    {-0.29901890577584361, 0.9528007946676823, -0.052519897841200848, 0.00063809411456041212},
    {-0.29901890577584361, -0.9528007946676823, -0.052519897841200848, 0.00063809411456041212},
    {0.052519897841200848, 0.9528007946676823, 0.29901890577584361, 0.00063809411456041212},
    {-0.052519897841200848, 0.9528007946676823, 0.29901890577584361, 0.00063809411456041212},
    {0.052519897841200848, -0.9528007946676823, 0.29901890577584361, 0.00063809411456041212},
    {0.052519897841200848, 0.9528007946676823, -0.29901890577584361, 0.00063809411456041212},
    {-0.052519897841200848, -0.9528007946676823, 0.29901890577584361, 0.00063809411456041212},
    {0.052519897841200848, -0.9528007946676823, -0.29901890577584361, 0.00063809411456041212},
    {-0.052519897841200848, 0.9528007946676823, -0.29901890577584361, 0.00063809411456041212},
    {-0.052519897841200848, -0.9528007946676823, -0.29901890577584361, 0.00063809411456041212},
    {0.62687240131449984, 0.2297523657550023, 0.74447622050685558, 0.00075503813779203102},
    {-0.62687240131449984, 0.2297523657550023, 0.74447622050685558, 0.00075503813779203102},
    {0.62687240131449984, -0.2297523657550023, 0.74447622050685558, 0.00075503813779203102},
    {0.62687240131449984, 0.2297523657550023, -0.74447622050685558, 0.00075503813779203102},
    {-0.62687240131449984, -0.2297523657550023, 0.74447622050685558, 0.00075503813779203102},
    {0.62687240131449984, -0.2297523657550023, -0.74447622050685558, 0.00075503813779203102},
    {-0.62687240131449984, 0.2297523657550023, -0.74447622050685558, 0.00075503813779203102},
    {-0.62687240131449984, -0.2297523657550023, -0.74447622050685558, 0.00075503813779203102},
    {0.2297523657550023, 0.62687240131449984, 0.74447622050685558, 0.00075503813779203102},
    {-0.2297523657550023, 0.62687240131449984, 0.74447622050685558, 0.00075503813779203102},
    {0.2297523657550023, -0.62687240131449984, 0.74447622050685558, 0.00075503813779203102},
    {0.2297523657550023, 0.62687240131449984, -0.74447622050685558, 0.00075503813779203102},
    {-0.2297523657550023, -0.62687240131449984, 0.74447622050685558, 0.00075503813779203102},
    {0.2297523657550023, -0.62687240131449984, -0.74447622050685558, 0.00075503813779203102},
    {-0.2297523657550023, 0.62687240131449984, -0.74447622050685558, 0.00075503813779203102},
    {-0.2297523657550023, -0.62687240131449984, -0.74447622050685558, 0.00075503813779203102},
    {0.74447622050685558, 0.62687240131449984, 0.2297523657550023, 0.00075503813779203102},
    {-0.74447622050685558, 0.62687240131449984, 0.2297523657550023, 0.00075503813779203102},
    {0.74447622050685558, -0.62687240131449984, 0.2297523657550023, 0.00075503813779203102},
    {0.74447622050685558, 0.62687240131449984, -0.2297523657550023, 0.00075503813779203102},
    {-0.74447622050685558, -0.62687240131449984, 0.2297523657550023, 0.00075503813779203102},
    {0.74447622050685558, -0.62687240131449984, -0.2297523657550023, 0.00075503813779203102},
    {-0.74447622050685558, 0.62687240131449984, -0.2297523657550023, 0.00075503813779203102},
    {-0.74447622050685558, -0.62687240131449984, -0.2297523657550023, 0.00075503813779203102},
    {0.74447622050685558, 0.2297523657550023, 0.62687240131449984, 0.00075503813779203102},
    {-0.74447622050685558, 0.2297523657550023, 0.62687240131449984, 0.00075503813779203102},
    {0.74447622050685558, -0.2297523657550023, 0.62687240131449984, 0.00075503813779203102},
    {0.74447622050685558, 0.2297523657550023, -0.62687240131449984, 0.00075503813779203102},
    {-0.74447622050685558, -0.2297523657550023, 0.62687240131449984, 0.00075503813779203102},
    {0.74447622050685558, -0.2297523657550023, -0.62687240131449984, 0.00075503813779203102},
    {-0.74447622050685558, 0.2297523657550023, -0.62687240131449984, 0.00075503813779203102},
    {-0.74447622050685558, -0.2297523657550023, -0.62687240131449984, 0.00075503813779203102},
    {0.62687240131449984, 0.74447622050685558, 0.2297523657550023, 0.00075503813779203102},
    {-0.62687240131449984, 0.74447622050685558, 0.2297523657550023, 0.00075503813779203102},
    {0.62687240131449984, -0.74447622050685558, 0.2297523657550023, 0.00075503813779203102},
    {0.62687240131449984, 0.74447622050685558, -0.2297523657550023, 0.00075503813779203102},
    {-0.62687240131449984, -0.74447622050685558, 0.2297523657550023, 0.00075503813779203102},
    {0.62687240131449984, -0.74447622050685558, -0.2297523657550023, 0.00075503813779203102},
    {-0.62687240131449984, 0.74447622050685558, -0.2297523657550023, 0.00075503813779203102},
    {-0.62687240131449984, -0.74447622050685558, -0.2297523657550023, 0.00075503813779203102},
    {0.2297523657550023, 0.74447622050685558, 0.62687240131449984, 0.00075503813779203102},
    {-0.2297523657550023, 0.74447622050685558, 0.62687240131449984, 0.00075503813779203102},
    {0.2297523657550023, -0.74447622050685558, 0.62687240131449984, 0.00075503813779203102},
    {0.2297523657550023, 0.74447622050685558, -0.62687240131449984, 0.00075503813779203102},
    {-0.2297523657550023, -0.74447622050685558, 0.62687240131449984, 0.00075503813779203102},
    {0.2297523657550023, -0.74447622050685558, -0.62687240131449984, 0.00075503813779203102},
    {-0.2297523657550023, 0.74447622050685558, -0.62687240131449984, 0.00075503813779203102},
    {-0.2297523657550023, -0.74447622050685558, -0.62687240131449984, 0.00075503813779203102},
    {0.57073241448346068, 0.17230806070938001, 0.80285393644949632, 0.00074786466401448022},
    {-0.57073241448346068, 0.17230806070938001, 0.80285393644949632, 0.00074786466401448022},
    {0.57073241448346068, -0.17230806070938001, 0.80285393644949632, 0.00074786466401448022},
    {0.57073241448346068, 0.17230806070938001, -0.80285393644949632, 0.00074786466401448022},
    {-0.57073241448346068, -0.17230806070938001, 0.80285393644949632, 0.00074786466401448022},
    {0.57073241448346068, -0.17230806070938001, -0.80285393644949632, 0.00074786466401448022},
    {-0.57073241448346068, 0.17230806070938001, -0.80285393644949632, 0.00074786466401448022},
    {-0.57073241448346068, -0.17230806070938001, -0.80285393644949632, 0.00074786466401448022},
    {0.17230806070938001, 0.57073241448346068, 0.80285393644949632, 0.00074786466401448022},
    {-0.17230806070938001, 0.57073241448346068, 0.80285393644949632, 0.00074786466401448022},
    {0.17230806070938001, -0.57073241448346068, 0.80285393644949632, 0.00074786466401448022},
    {0.17230806070938001, 0.57073241448346068, -0.80285393644949632, 0.00074786466401448022},
    {-0.17230806070938001, -0.57073241448346068, 0.80285393644949632, 0.00074786466401448022},
    {0.17230806070938001, -0.57073241448346068, -0.80285393644949632, 0.00074786466401448022},
    {-0.17230806070938001, 0.57073241448346068, -0.80285393644949632, 0.00074786466401448022},
    {-0.17230806070938001, -0.57073241448346068, -0.80285393644949632, 0.00074786466401448022},
    {0.80285393644949632, 0.57073241448346068, 0.17230806070938001, 0.00074786466401448022},
    {-0.80285393644949632, 0.57073241448346068, 0.17230806070938001, 0.00074786466401448022},
    {0.80285393644949632, -0.57073241448346068, 0.17230806070938001, 0.00074786466401448022},
    {0.80285393644949632, 0.57073241448346068, -0.17230806070938001, 0.00074786466401448022},
    {-0.80285393644949632, -0.57073241448346068, 0.17230806070938001, 0.00074786466401448022},
    {0.80285393644949632, -0.57073241448346068, -0.17230806070938001, 0.00074786466401448022},
    {-0.80285393644949632, 0.57073241448346068, -0.17230806070938001, 0.00074786466401448022},
    {-0.80285393644949632, -0.57073241448346068, -0.17230806070938001, 0.00074786466401448022},
    {0.80285393644949632, 0.17230806070938001, 0.57073241448346068, 0.00074786466401448022},
    {-0.80285393644949632, 0.17230806070938001, 0.57073241448346068, 0.00074786466401448022},
    {0.80285393644949632, -0.17230806070938001, 0.57073241448346068, 0.00074786466401448022},
    {0.80285393644949632, 0.17230806070938001, -0.57073241448346068, 0.00074786466401448022},
    {-0.80285393644949632, -0.17230806070938001, 0.57073241448346068, 0.00074786466401448022},
    {0.80285393644949632, -0.17230806070938001, -0.57073241448346068, 0.00074786466401448022},
    {-0.80285393644949632, 0.17230806070938001, -0.57073241448346068, 0.00074786466401448022},
    {-0.80285393644949632, -0.17230806070938001, -0.57073241448346068, 0.00074786466401448022},
    {0.57073241448346068, 0.80285393644949632, 0.17230806070938001, 0.00074786466401448022},
    {-0.57073241448346068, 0.80285393644949632, 0.17230806070938001, 0.00074786466401448022},
    {0.57073241448346068, -0.80285393644949632, 0.17230806070938001, 0.00074786466401448022},
    {0.57073241448346068, 0.80285393644949632, -0.17230806070938001, 0.00074786466401448022},
    {-0.57073241448346068, -0.80285393644949632, 0.17230806070938001, 0.00074786466401448022},
    {0.57073241448346068, -0.80285393644949632, -0.17230806070938001, 0.00074786466401448022},
    {-0.57073241448346068, 0.80285393644949632, -0.17230806070938001, 0.00074786466401448022},
    {-0.57073241448346068, -0.80285393644949632, -0.17230806070938001, 0.00074786466401448022},
    {0.17230806070938001, 0.80285393644949632, 0.57073241448346068, 0.00074786466401448022},
    {-0.17230806070938001, 0.80285393644949632, 0.57073241448346068, 0.00074786466401448022},
    {0.17230806070938001, -0.80285393644949632, 0.57073241448346068, 0.00074786466401448022},
    {0.17230806070938001, 0.80285393644949632, -0.57073241448346068, 0.00074786466401448022},
    {-0.17230806070938001, -0.80285393644949632, 0.57073241448346068, 0.00074786466401448022},
    {0.17230806070938001, -0.80285393644949632, -0.57073241448346068, 0.00074786466401448022},
    {-0.17230806070938001, 0.80285393644949632, -0.57073241448346068, 0.00074786466401448022},
    {-0.17230806070938001, -0.80285393644949632, -0.57073241448346068, 0.00074786466401448022},
    {0.50963609019603651, 0.1140238465390513, 0.85280104244198507, 0.00073359187206012205},
    {-0.50963609019603651, 0.1140238465390513, 0.85280104244198507, 0.00073359187206012205},
    {0.50963609019603651, -0.1140238465390513, 0.85280104244198507, 0.00073359187206012205},
    {0.50963609019603651, 0.1140238465390513, -0.85280104244198507, 0.00073359187206012205},
    {-0.50963609019603651, -0.1140238465390513, 0.85280104244198507, 0.00073359187206012205},
    {0.50963609019603651, -0.1140238465390513, -0.85280104244198507, 0.00073359187206012205},
    {-0.50963609019603651, 0.1140238465390513, -0.85280104244198507, 0.00073359187206012205},
    {-0.50963609019603651, -0.1140238465390513, -0.85280104244198507, 0.00073359187206012205},
    {0.1140238465390513, 0.50963609019603651, 0.85280104244198507, 0.00073359187206012205},
    {-0.1140238465390513, 0.50963609019603651, 0.85280104244198507, 0.00073359187206012205},
    {0.1140238465390513, -0.50963609019603651, 0.85280104244198507, 0.00073359187206012205},
    {0.1140238465390513, 0.50963609019603651, -0.85280104244198507, 0.00073359187206012205},
    {-0.1140238465390513, -0.50963609019603651, 0.85280104244198507, 0.00073359187206012205},
    {0.1140238465390513, -0.50963609019603651, -0.85280104244198507, 0.00073359187206012205},
    {-0.1140238465390513, 0.50963609019603651, -0.85280104244198507, 0.00073359187206012205},
    {-0.1140238465390513, -0.50963609019603651, -0.85280104244198507, 0.00073359187206012205},
    {0.85280104244198507, 0.50963609019603651, 0.1140238465390513, 0.00073359187206012205},
    {-0.85280104244198507, 0.50963609019603651, 0.1140238465390513, 0.00073359187206012205},
    {0.85280104244198507, -0.50963609019603651, 0.1140238465390513, 0.00073359187206012205},
    {0.85280104244198507, 0.50963609019603651, -0.1140238465390513, 0.00073359187206012205},
    {-0.85280104244198507, -0.50963609019603651, 0.1140238465390513, 0.00073359187206012205},
    {0.85280104244198507, -0.50963609019603651, -0.1140238465390513, 0.00073359187206012205},
    {-0.85280104244198507, 0.50963609019603651, -0.1140238465390513, 0.00073359187206012205},
    {-0.85280104244198507, -0.50963609019603651, -0.1140238465390513, 0.00073359187206012205},
    {0.85280104244198507, 0.1140238465390513, 0.50963609019603651, 0.00073359187206012205},
    {-0.85280104244198507, 0.1140238465390513, 0.50963609019603651, 0.00073359187206012205},
    {0.85280104244198507, -0.1140238465390513, 0.50963609019603651, 0.00073359187206012205},
    {0.85280104244198507, 0.1140238465390513, -0.50963609019603651, 0.00073359187206012205},
    {-0.85280104244198507, -0.1140238465390513, 0.50963609019603651, 0.00073359187206012205},
    {0.85280104244198507, -0.1140238465390513, -0.50963609019603651, 0.00073359187206012205},
    {-0.85280104244198507, 0.1140238465390513, -0.50963609019603651, 0.00073359187206012205},
    {-0.85280104244198507, -0.1140238465390513, -0.50963609019603651, 0.00073359187206012205},
    {0.50963609019603651, 0.85280104244198507, 0.1140238465390513, 0.00073359187206012205},
    {-0.50963609019603651, 0.85280104244198507, 0.1140238465390513, 0.00073359187206012205},
    {0.50963609019603651, -0.85280104244198507, 0.1140238465390513, 0.00073359187206012205},
    {0.50963609019603651, 0.85280104244198507, -0.1140238465390513, 0.00073359187206012205},
    {-0.50963609019603651, -0.85280104244198507, 0.1140238465390513, 0.00073359187206012205},
    {0.50963609019603651, -0.85280104244198507, -0.1140238465390513, 0.00073359187206012205},
    {-0.50963609019603651, 0.85280104244198507, -0.1140238465390513, 0.00073359187206012205},
    {-0.50963609019603651, -0.85280104244198507, -0.1140238465390513, 0.00073359187206012205},
    {0.1140238465390513, 0.85280104244198507, 0.50963609019603651, 0.00073359187206012205},
    {-0.1140238465390513, 0.85280104244198507, 0.50963609019603651, 0.00073359187206012205},
    {0.1140238465390513, -0.85280104244198507, 0.50963609019603651, 0.00073359187206012205},
    {0.1140238465390513, 0.85280104244198507, -0.50963609019603651, 0.00073359187206012205},
    {-0.1140238465390513, -0.85280104244198507, 0.50963609019603651, 0.00073359187206012205},
    {0.1140238465390513, -0.85280104244198507, -0.50963609019603651, 0.00073359187206012205},
    {-0.1140238465390513, 0.85280104244198507, -0.50963609019603651, 0.00073359187206012205},
    {-0.1140238465390513, -0.85280104244198507, -0.50963609019603651, 0.00073359187206012205},
    {0.44387299383124562, 0.056115220958825367, 0.8943309495505728, 0.00071101205276581192},
    {-0.44387299383124562, 0.056115220958825367, 0.8943309495505728, 0.00071101205276581192},
    {0.44387299383124562, -0.056115220958825367, 0.8943309495505728, 0.00071101205276581192},
    {0.44387299383124562, 0.056115220958825367, -0.8943309495505728, 0.00071101205276581192},
    {-0.44387299383124562, -0.056115220958825367, 0.8943309495505728, 0.00071101205276581192},
    {0.44387299383124562, -0.056115220958825367, -0.8943309495505728, 0.00071101205276581192},
    {-0.44387299383124562, 0.056115220958825367, -0.8943309495505728, 0.00071101205276581192},
    {-0.44387299383124562, -0.056115220958825367, -0.8943309495505728, 0.00071101205276581192},
    {0.056115220958825367, 0.44387299383124562, 0.8943309495505728, 0.00071101205276581192},
    {-0.056115220958825367, 0.44387299383124562, 0.8943309495505728, 0.00071101205276581192},
    {0.056115220958825367, -0.44387299383124562, 0.8943309495505728, 0.00071101205276581192},
    {0.056115220958825367, 0.44387299383124562, -0.8943309495505728, 0.00071101205276581192},
    {-0.056115220958825367, -0.44387299383124562, 0.8943309495505728, 0.00071101205276581192},
    {0.056115220958825367, -0.44387299383124562, -0.8943309495505728, 0.00071101205276581192},
    {-0.056115220958825367, 0.44387299383124562, -0.8943309495505728, 0.00071101205276581192},
    {-0.056115220958825367, -0.44387299383124562, -0.8943309495505728, 0.00071101205276581192},
    {0.8943309495505728, 0.44387299383124562, 0.056115220958825367, 0.00071101205276581192},
    {-0.8943309495505728, 0.44387299383124562, 0.056115220958825367, 0.00071101205276581192},
    {0.8943309495505728, -0.44387299383124562, 0.056115220958825367, 0.00071101205276581192},
    {0.8943309495505728, 0.44387299383124562, -0.056115220958825367, 0.00071101205276581192},
    {-0.8943309495505728, -0.44387299383124562, 0.056115220958825367, 0.00071101205276581192},
    {0.8943309495505728, -0.44387299383124562, -0.056115220958825367, 0.00071101205276581192},
    {-0.8943309495505728, 0.44387299383124562, -0.056115220958825367, 0.00071101205276581192},
    {-0.8943309495505728, -0.44387299383124562, -0.056115220958825367, 0.00071101205276581192},
    {0.8943309495505728, 0.056115220958825367, 0.44387299383124562, 0.00071101205276581192},
    {-0.8943309495505728, 0.056115220958825367, 0.44387299383124562, 0.00071101205276581192},
    {0.8943309495505728, -0.056115220958825367, 0.44387299383124562, 0.00071101205276581192},
    {0.8943309495505728, 0.056115220958825367, -0.44387299383124562, 0.00071101205276581192},
    {-0.8943309495505728, -0.056115220958825367, 0.44387299383124562, 0.00071101205276581192},
    {0.8943309495505728, -0.056115220958825367, -0.44387299383124562, 0.00071101205276581192},
    {-0.8943309495505728, 0.056115220958825367, -0.44387299383124562, 0.00071101205276581192},
    {-0.8943309495505728, -0.056115220958825367, -0.44387299383124562, 0.00071101205276581192},
    {0.44387299383124562, 0.8943309495505728, 0.056115220958825367, 0.00071101205276581192},
    {-0.44387299383124562, 0.8943309495505728, 0.056115220958825367, 0.00071101205276581192},
    {0.44387299383124562, -0.8943309495505728, 0.056115220958825367, 0.00071101205276581192},
    {0.44387299383124562, 0.8943309495505728, -0.056115220958825367, 0.00071101205276581192},
    {-0.44387299383124562, -0.8943309495505728, 0.056115220958825367, 0.00071101205276581192},
    {0.44387299383124562, -0.8943309495505728, -0.056115220958825367, 0.00071101205276581192},
    {-0.44387299383124562, 0.8943309495505728, -0.056115220958825367, 0.00071101205276581192},
    {-0.44387299383124562, -0.8943309495505728, -0.056115220958825367, 0.00071101205276581192},
    {0.056115220958825367, 0.8943309495505728, 0.44387299383124562, 0.00071101205276581192},
    {-0.056115220958825367, 0.8943309495505728, 0.44387299383124562, 0.00071101205276581192},
    {0.056115220958825367, -0.8943309495505728, 0.44387299383124562, 0.00071101205276581192},
    {0.056115220958825367, 0.8943309495505728, -0.44387299383124562, 0.00071101205276581192},
    {-0.056115220958825367, -0.8943309495505728, 0.44387299383124562, 0.00071101205276581192},
    {0.056115220958825367, -0.8943309495505728, -0.44387299383124562, 0.00071101205276581192},
    {-0.056115220958825367, 0.8943309495505728, -0.44387299383124562, 0.00071101205276581192},
    {-0.056115220958825367, -0.8943309495505728, -0.44387299383124562, 0.00071101205276581192},
    {0.64199784710823893, 0.11641744231408729, 0.75781643122423281, 0.00075713639786895008},
    {-0.64199784710823893, 0.11641744231408729, 0.75781643122423281, 0.00075713639786895008},
    {0.64199784710823893, -0.11641744231408729, 0.75781643122423281, 0.00075713639786895008},
    {0.64199784710823893, 0.11641744231408729, -0.75781643122423281, 0.00075713639786895008},
    {-0.64199784710823893, -0.11641744231408729, 0.75781643122423281, 0.00075713639786895008},
    {0.64199784710823893, -0.11641744231408729, -0.75781643122423281, 0.00075713639786895008},
    {-0.64199784710823893, 0.11641744231408729, -0.75781643122423281, 0.00075713639786895008},
    {-0.64199784710823893, -0.11641744231408729, -0.75781643122423281, 0.00075713639786895008},
    {0.11641744231408729, 0.64199784710823893, 0.75781643122423281, 0.00075713639786895008},
    {-0.11641744231408729, 0.64199784710823893, 0.75781643122423281, 0.00075713639786895008},
    {0.11641744231408729, -0.64199784710823893, 0.75781643122423281, 0.00075713639786895008},
    {0.11641744231408729, 0.64199784710823893, -0.75781643122423281, 0.00075713639786895008},
    {-0.11641744231408729, -0.64199784710823893, 0.75781643122423281, 0.00075713639786895008},
    {0.11641744231408729, -0.64199784710823893, -0.75781643122423281, 0.00075713639786895008},
    {-0.11641744231408729, 0.64199784710823893, -0.75781643122423281, 0.00075713639786895008},
    {-0.11641744231408729, -0.64199784710823893, -0.75781643122423281, 0.00075713639786895008},
    {0.75781643122423281, 0.64199784710823893, 0.11641744231408729, 0.00075713639786895008},
    {-0.75781643122423281, 0.64199784710823893, 0.11641744231408729, 0.00075713639786895008},
    {0.75781643122423281, -0.64199784710823893, 0.11641744231408729, 0.00075713639786895008},
    {0.75781643122423281, 0.64199784710823893, -0.11641744231408729, 0.00075713639786895008},
    {-0.75781643122423281, -0.64199784710823893, 0.11641744231408729, 0.00075713639786895008},
    {0.75781643122423281, -0.64199784710823893, -0.11641744231408729, 0.00075713639786895008},
    {-0.75781643122423281, 0.64199784710823893, -0.11641744231408729, 0.00075713639786895008},
    {-0.75781643122423281, -0.64199784710823893, -0.11641744231408729, 0.00075713639786895008},
    {0.75781643122423281, 0.11641744231408729, 0.64199784710823893, 0.00075713639786895008},
    {-0.75781643122423281, 0.11641744231408729, 0.64199784710823893, 0.00075713639786895008},
    {0.75781643122423281, -0.11641744231408729, 0.64199784710823893, 0.00075713639786895008},
    {0.75781643122423281, 0.11641744231408729, -0.64199784710823893, 0.00075713639786895008},
    {-0.75781643122423281, -0.11641744231408729, 0.64199784710823893, 0.00075713639786895008},
    {0.75781643122423281, -0.11641744231408729, -0.64199784710823893, 0.00075713639786895008},
    {-0.75781643122423281, 0.11641744231408729, -0.64199784710823893, 0.00075713639786895008},
    {-0.75781643122423281, -0.11641744231408729, -0.64199784710823893, 0.00075713639786895008},
    {0.64199784710823893, 0.75781643122423281, 0.11641744231408729, 0.00075713639786895008},
    {-0.64199784710823893, 0.75781643122423281, 0.11641744231408729, 0.00075713639786895008},
    {0.64199784710823893, -0.75781643122423281, 0.11641744231408729, 0.00075713639786895008},
    {0.64199784710823893, 0.75781643122423281, -0.11641744231408729, 0.00075713639786895008},
    {-0.64199784710823893, -0.75781643122423281, 0.11641744231408729, 0.00075713639786895008},
    {0.64199784710823893, -0.75781643122423281, -0.11641744231408729, 0.00075713639786895008},
    {-0.64199784710823893, 0.75781643122423281, -0.11641744231408729, 0.00075713639786895008},
    {-0.64199784710823893, -0.75781643122423281, -0.11641744231408729, 0.00075713639786895008},
    {0.11641744231408729, 0.75781643122423281, 0.64199784710823893, 0.00075713639786895008},
    {-0.11641744231408729, 0.75781643122423281, 0.64199784710823893, 0.00075713639786895008},
    {0.11641744231408729, -0.75781643122423281, 0.64199784710823893, 0.00075713639786895008},
    {0.11641744231408729, 0.75781643122423281, -0.64199784710823893, 0.00075713639786895008},
    {-0.11641744231408729, -0.75781643122423281, 0.64199784710823893, 0.00075713639786895008},
    {0.11641744231408729, -0.75781643122423281, -0.64199784710823893, 0.00075713639786895008},
    {-0.11641744231408729, 0.75781643122423281, -0.64199784710823893, 0.00075713639786895008},
    {-0.11641744231408729, -0.75781643122423281, -0.64199784710823893, 0.00075713639786895008},
    {0.58172180618026115, 0.057975895314452193, 0.81131900987026206, 0.00074899083290792345},
    {-0.58172180618026115, 0.057975895314452193, 0.81131900987026206, 0.00074899083290792345},
    {0.58172180618026115, -0.057975895314452193, 0.81131900987026206, 0.00074899083290792345},
    {0.58172180618026115, 0.057975895314452193, -0.81131900987026206, 0.00074899083290792345},
    {-0.58172180618026115, -0.057975895314452193, 0.81131900987026206, 0.00074899083290792345},
    {0.58172180618026115, -0.057975895314452193, -0.81131900987026206, 0.00074899083290792345},
    {-0.58172180618026115, 0.057975895314452193, -0.81131900987026206, 0.00074899083290792345},
    {-0.58172180618026115, -0.057975895314452193, -0.81131900987026206, 0.00074899083290792345},
    {0.057975895314452193, 0.58172180618026115, 0.81131900987026206, 0.00074899083290792345},
    {-0.057975895314452193, 0.58172180618026115, 0.81131900987026206, 0.00074899083290792345},
    {0.057975895314452193, -0.58172180618026115, 0.81131900987026206, 0.00074899083290792345},
    {0.057975895314452193, 0.58172180618026115, -0.81131900987026206, 0.00074899083290792345},
    {-0.057975895314452193, -0.58172180618026115, 0.81131900987026206, 0.00074899083290792345},
    {0.057975895314452193, -0.58172180618026115, -0.81131900987026206, 0.00074899083290792345},
    {-0.057975895314452193, 0.58172180618026115, -0.81131900987026206, 0.00074899083290792345},
    {-0.057975895314452193, -0.58172180618026115, -0.81131900987026206, 0.00074899083290792345},
    {0.81131900987026206, 0.58172180618026115, 0.057975895314452193, 0.00074899083290792345},
    {-0.81131900987026206, 0.58172180618026115, 0.057975895314452193, 0.00074899083290792345},
    {0.81131900987026206, -0.58172180618026115, 0.057975895314452193, 0.00074899083290792345},
    {0.81131900987026206, 0.58172180618026115, -0.057975895314452193, 0.00074899083290792345},
    {-0.81131900987026206, -0.58172180618026115, 0.057975895314452193, 0.00074899083290792345},
    {0.81131900987026206, -0.58172180618026115, -0.057975895314452193, 0.00074899083290792345},
    {-0.81131900987026206, 0.58172180618026115, -0.057975895314452193, 0.00074899083290792345},
    {-0.81131900987026206, -0.58172180618026115, -0.057975895314452193, 0.00074899083290792345},
    {0.81131900987026206, 0.057975895314452193, 0.58172180618026115, 0.00074899083290792345},
    {-0.81131900987026206, 0.057975895314452193, 0.58172180618026115, 0.00074899083290792345},
    {0.81131900987026206, -0.057975895314452193, 0.58172180618026115, 0.00074899083290792345},
    {0.81131900987026206, 0.057975895314452193, -0.58172180618026115, 0.00074899083290792345},
    {-0.81131900987026206, -0.057975895314452193, 0.58172180618026115, 0.00074899083290792345},
    {0.81131900987026206, -0.057975895314452193, -0.58172180618026115, 0.00074899083290792345},
    {-0.81131900987026206, 0.057975895314452193, -0.58172180618026115, 0.00074899083290792345},
    {-0.81131900987026206, -0.057975895314452193, -0.58172180618026115, 0.00074899083290792345},
    {0.58172180618026115, 0.81131900987026206, 0.057975895314452193, 0.00074899083290792345},
    {-0.58172180618026115, 0.81131900987026206, 0.057975895314452193, 0.00074899083290792345},
    {0.58172180618026115, -0.81131900987026206, 0.057975895314452193, 0.00074899083290792345},
    {0.58172180618026115, 0.81131900987026206, -0.057975895314452193, 0.00074899083290792345},
    {-0.58172180618026115, -0.81131900987026206, 0.057975895314452193, 0.00074899083290792345},
    {0.58172180618026115, -0.81131900987026206, -0.057975895314452193, 0.00074899083290792345},
    {-0.58172180618026115, 0.81131900987026206, -0.057975895314452193, 0.00074899083290792345},
    {-0.58172180618026115, -0.81131900987026206, -0.057975895314452193, 0.00074899083290792345},
    {0.057975895314452193, 0.81131900987026206, 0.58172180618026115, 0.00074899083290792345},
    {-0.057975895314452193, 0.81131900987026206, 0.58172180618026115, 0.00074899083290792345},
    {0.057975895314452193, -0.81131900987026206, 0.58172180618026115, 0.00074899083290792345},
    {0.057975895314452193, 0.81131900987026206, -0.58172180618026115, 0.00074899083290792345},
    {-0.057975895314452193, -0.81131900987026206, 0.58172180618026115, 0.00074899083290792345},
    {0.057975895314452193, -0.81131900987026206, -0.58172180618026115, 0.00074899083290792345},
    {-0.057975895314452193, 0.81131900987026206, -0.58172180618026115, 0.00074899083290792345},
    {-0.057975895314452193, -0.81131900987026206, -0.58172180618026115, 0.00074899083290792345},
};
}  // namespace

std::span<const LebedevGrid> lebedev_grids() {
  static constexpr LebedevGrid grids[] = {
      {5, kOrder5},
      {7, kOrder7},
      {9, kOrder9},
      {11, kOrder11},
      {17, kOrder17},
      {35, kOrder35},
      {65, kOrder65},
  };
  return grids;
}

}  // namespace boltz::detail
