from rest_framework import serializers


class ResourceReportSerializer(serializers.Serializer):
    frame = serializers.CharField()
    pair = serializers.ListField(child=serializers.CharField())
    local = serializers.CharField()
    C2 = serializers.FloatField()
    D2 = serializers.FloatField()
    P2 = serializers.FloatField()
    D2_purity = serializers.FloatField()
    coherence_measure = serializers.CharField()
    sum_CD = serializers.FloatField(read_only=True)
    sum_CDP = serializers.FloatField(read_only=True)
    measures_diverge = serializers.BooleanField(read_only=True)
    flags = serializers.ListField(child=serializers.CharField(), read_only=True)
