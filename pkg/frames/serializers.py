from rest_framework import serializers

from tensors.serializers import MatrixField


def _element(g):
    return list(g.coords)


class GateClassSerializer(serializers.Serializer):
    kind = serializers.SerializerMethodField()
    character = serializers.SerializerMethodField()

    def get_kind(self, obj):
        return obj.kind.value

    def get_character(self, obj):
        if obj.character is None:
            return None
        g = obj.character.group
        return {
            "label": list(obj.character.label),
            "name": str(obj.character),
            "values": [{"element": _element(h), "re": float(v.real), "im": float(v.imag)}
                       for h, v in zip(g.elements, obj.character.values())],
        }


class ControlledBlockSerializer(serializers.Serializer):
    element = serializers.SerializerMethodField()
    block = serializers.SerializerMethodField()

    def get_element(self, obj):
        return _element(obj[0])

    def get_block(self, obj):
        return MatrixField().to_representation(obj[1])


class ControlledOperatorSerializer(serializers.Serializer):
    control = serializers.CharField()
    target = serializers.ListField(child=serializers.CharField())
    spectators = serializers.ListField(child=serializers.CharField())
    distinct_blocks = serializers.SerializerMethodField()
    blocks = ControlledBlockSerializer(many=True)

    def get_distinct_blocks(self, obj):
        return obj.distinct_blocks()
