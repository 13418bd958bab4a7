from bohrmajorant.builder import MoebiusSpec
from bohrmajorant.radius import Predicate, validity_radius, closed_form_bohr_radius, closed_form_rogosinski_radius

if __name__ == '__main__':
    print('a,bohr,bohr_closed_form,rogosinski,rogosinski_closed_form')
    for a in (0.5, 0.9, 0.99, 0.999):
        bohr = validity_radius(Predicate('bohr', {'f': MoebiusSpec(a)}))
        rogosinski = validity_radius(Predicate('rogosinski', {'f': MoebiusSpec(a)}, k=1))
        print('{},{!r},{!r},{!r},{!r}'.format(a, bohr.radius_high, closed_form_bohr_radius(a),
                                              rogosinski.radius_high, closed_form_rogosinski_radius(a)))
